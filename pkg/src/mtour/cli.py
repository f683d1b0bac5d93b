"""Command-line entry point.

Exit codes: 0 success, 1 check failure, 2 usage error (argparse), and
3 when a run finished but contains inconclusive (cap-hit) records.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .cycles import cycle_spectrum, find_cycle
from .errors import TournamentError
from .families import (
    HSpec,
    QSpec,
    WSpec,
    gen_Q,
    gen_Qprime,
    gen_W,
    random_rich,
    random_strong_hspec,
    gen_H,
)
from .formats import from_json, to_dot, to_json
from .harness import (
    CampaignConfig,
    check_bondy,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    run_campaign,
)
from .recognize import recognize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 3


def _parse_blowup(items: list[str]) -> dict[int, int]:
    out = {}
    for item in items:
        idx, _, size = item.partition("=")
        out[int(idx)] = int(size)
    return out


def _parse_sizes(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def _emit(D, args) -> None:
    if args.dot:
        sys.stdout.write(to_dot(D))
    else:
        sys.stdout.write(to_json(D))


def _cmd_gen(args) -> int:
    fam = args.family
    if fam == "w":
        D = gen_W(WSpec(c=args.c, m=args.m, blowup=_parse_blowup(args.blowup)))
    elif fam == "qprime":
        D = gen_Qprime(args.c, args.m)
    elif fam == "q":
        reversal = None if args.reversal in (None, "none") else int(args.reversal)
        D = gen_Q(
            QSpec(
                c=args.c,
                m=args.m,
                s=args.s,
                t=args.t,
                blowup=_parse_blowup(args.blowup),
                reversal=reversal,
                reversal_count=args.reversal_count,
            )
        )
    elif fam == "h":
        sizes = _parse_sizes(args.sizes)
        if len(sizes) != args.c:
            raise TournamentError("h needs one size per chain class 2..c+1")
        size_map = {j + 2: sizes[j] for j in range(args.c)}
        spec = random_strong_hspec(args.c, args.i, size_map, seed=args.seed)
        D = gen_H(spec)
    elif fam == "random":
        D = random_rich(args.c, _parse_sizes(args.sizes), seed=args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise TournamentError(f"unknown family {fam}")
    _emit(D, args)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    D = _load(args.input)
    spec = cycle_spectrum(D, args.qmax, mode=args.mode)
    print(json.dumps({"lengths": spec.lengths()}))
    return EXIT_OK


def _cmd_find_cycle(args) -> int:
    D = _load(args.input)
    w = find_cycle(D, args.q, mode=args.mode)
    print(json.dumps({"q": args.q, "cycle": list(w.vertices) if w else None}))
    return EXIT_OK


def _cmd_recognize(args) -> int:
    D = _load(args.input)
    res = recognize(D)
    out = {"verdict": res.verdict}
    if res.spec is not None:
        out["spec"] = repr(res.spec)
        out["correspondence"] = {str(k): v for k, v in sorted(res.correspondence.items())}
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    D = _load(args.input)
    recs = [
        check_theorem1(D),
        check_theorem2(D),
        check_theorem3(D),
        check_bondy(D),
    ]
    for r in recs:
        status = "pass" if r.passed else ("inconclusive" if r.passed is None else "FAIL")
        print(f"{r.check:<12} {status}  {json.dumps(r.detail)}")
    if any(r.passed is False for r in recs):
        return EXIT_FAIL
    if any(r.passed is None for r in recs):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    cfg = CampaignConfig(
        fuzz_c=args.c,
        fuzz_part_size=args.part_size,
        fuzz_seeds=range(args.seed, args.seed + args.count),
        explore=args.explore,
    )
    report = run_campaign(cfg)
    print(json.dumps(report.to_dict(), indent=2))
    if report.failures:
        return EXIT_FAIL
    if report.inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_report(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    per: dict[str, list[int]] = {}
    for r in doc.get("records", []):
        row = per.setdefault(r["check"], [0, 0, 0])
        row[0 if r["passed"] is True else 1 if r["passed"] is False else 2] += 1
    print(f"{'check':<22}{'pass':>8}{'fail':>8}{'inconcl':>9}")
    for name in sorted(per):
        p, f, i = per[name]
        print(f"{name:<22}{p:>8}{f:>8}{i:>9}")
    counts = doc.get("counts", {})
    print(
        f"total {counts.get('total', 0)}  passed {counts.get('passed', 0)}"
        f"  failed {counts.get('failed', 0)}  inconclusive {counts.get('inconclusive', 0)}"
    )
    if counts.get("failed"):
        return EXIT_FAIL
    if counts.get("inconclusive"):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mtour", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a family member or random instance")
    g.add_argument("--family", required=True, choices=["w", "qprime", "q", "h", "random"])
    g.add_argument("--c", type=int, default=8)
    g.add_argument("--m", type=int)
    g.add_argument("--s", type=int)
    g.add_argument("--t", type=int)
    g.add_argument("--i", type=int)
    g.add_argument("--blowup", nargs="*", default=[], metavar="IDX=SIZE")
    g.add_argument("--reversal", choices=["none", "1", "2", "3", "4"], default="none")
    g.add_argument("--reversal-count", type=int, default=1)
    g.add_argument("--sizes", help="comma-separated sizes (h: chain classes; random: parts)")
    g.add_argument("--seed", type=int, default=0)
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--dot", action="store_true")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("spectrum", help="cycle-length spectrum of an instance")
    s.add_argument("--input", required=True)
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--mode", choices=["fast", "oracle"], default="fast")
    s.set_defaults(func=_cmd_spectrum)

    f = sub.add_parser("find-cycle", help="search for a cycle of one length")
    f.add_argument("--input", required=True)
    f.add_argument("--q", type=int, required=True)
    f.add_argument("--mode", choices=["fast", "oracle"], default="fast")
    f.set_defaults(func=_cmd_find_cycle)

    r = sub.add_parser("recognize", help="family-membership verdict")
    r.add_argument("--input", required=True)
    r.set_defaults(func=_cmd_recognize)

    v = sub.add_parser("verify", help="run the per-instance checks")
    v.add_argument("--input", required=True)
    v.set_defaults(func=_cmd_verify)

    z = sub.add_parser("fuzz", help="seeded random campaign")
    z.add_argument("--c", type=int, default=8)
    z.add_argument("--part-size", type=int, default=2)
    z.add_argument("--count", type=int, default=100)
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--explore", action="store_true", help="allow c < 8")
    z.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("report", help="render a campaign report as a table")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_report)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TournamentError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
