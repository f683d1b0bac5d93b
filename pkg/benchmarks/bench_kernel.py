"""Compare the compiled cycle-search kernel against the pure-Python one.

Usage: python3 benchmarks/bench_kernel.py [--seeds N] [--repeat R]
"""

from __future__ import annotations

import argparse
import random
import time

from mtour import _pykernel
from mtour.cycles import HAVE_COMPILED
from mtour.digraph import build
from mtour.families import QSpec, gen_Q, random_rich

if HAVE_COMPILED:
    from mtour import _cykernel


def _random_instance(seed: int, c: int, size: int):
    return random_rich(c, [size] * c, seed)


def _bench(kernel, name: str, workload, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for D, q in workload:
            kernel.find_cycle_pruned(D.out_mask, D.n, q)
            kernel.find_cycle_plain(D.out_mask, D.n, q)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    workloads = {
        "random c=8 n=16, q=3..10": [
            (D, q)
            for s in range(args.seeds)
            for D in [_random_instance(s, 8, 2)]
            for q in range(3, 11)
        ],
        "family member m=20, q=9..10": [
            (gen_Q(QSpec(c=8, m=20, s=3, t=6,
                         blowup={1: 2, 2: 2, 19: 2, 20: 2})), q)
            for q in (9, 10)
        ],
    }

    for name, wl in workloads.items():
        py = _bench(_pykernel, "pure", wl, args.repeat)
        line = f"{name:<32} pure {py * 1e3:8.1f} ms"
        if HAVE_COMPILED:
            cy = _bench(_cykernel, "compiled", wl, args.repeat)
            line += f"   compiled {cy * 1e3:8.1f} ms   speedup {py / cy:6.1f}x"
        else:
            line += "   (compiled kernel not built)"
        print(line)


if __name__ == "__main__":
    main()
