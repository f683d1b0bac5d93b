"""Exact fixed-length cycle search, spectra, insertion and range checks.

``fast`` mode uses the pruned anchored DFS (compiled kernel when the
extension built and n <= 64, pure Python otherwise).  ``oracle`` mode is
the plain exhaustive DFS used as ground truth; the two must agree on
existence for every input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import _pykernel
from .digraph import MultipartiteTournament
from .errors import BadLength, VertexOnCycle

try:
    from . import _cykernel

    HAVE_COMPILED = True
except ImportError:  # extension not built
    _cykernel = None
    HAVE_COMPILED = False


def _backend(n: int):
    if HAVE_COMPILED and n <= 64:
        return _cykernel
    return _pykernel


@dataclass(frozen=True)
class CycleWitness:
    """A simple directed cycle, stored anchored at its minimum vertex."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def validate(self, D: MultipartiteTournament) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(D.has_arc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def parts_met(self, D: MultipartiteTournament) -> int:
        return len({D.part_of[v] for v in self.vertices})


@dataclass
class CycleSpectrum:
    """Per-length cycle existence with optional witnesses, lengths 3..q_max."""

    q_max: int
    witnesses: dict[int, Optional[CycleWitness]] = field(default_factory=dict)

    def exists(self, q: int) -> bool:
        return self.witnesses.get(q) is not None

    def lengths(self) -> list[int]:
        return [q for q in range(3, self.q_max + 1) if self.exists(q)]


@dataclass
class ExtensionReport:
    """Result of the cycle-extension range check on one witness cycle."""

    k: int
    l: int
    required: tuple[int, int]
    violations: list[int]

    @property
    def ok(self) -> bool:
        return not self.violations


def find_cycle(
    D: MultipartiteTournament, q: int, mode: str = "fast"
) -> Optional[CycleWitness]:
    """A simple cycle with exactly q arcs, or None if no such cycle exists.

    The returned witness is the lexicographically smallest one under
    vertex-id order, independent of mode.
    """
    if q < 3 or q > D.n:
        raise BadLength(f"cycle length {q} outside [3, {D.n}]")
    if mode == "oracle":
        got = _backend(D.n).find_cycle_plain(D.out_mask, D.n, q)
    elif mode == "fast":
        got = _backend(D.n).find_cycle_pruned(D.out_mask, D.n, q)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return CycleWitness(got) if got is not None else None


def cycle_spectrum(
    D: MultipartiteTournament, q_max: int, mode: str = "fast"
) -> CycleSpectrum:
    """Existence of q-cycles for every q in [3, q_max]."""
    if q_max > D.n:
        raise BadLength(f"q_max {q_max} exceeds vertex count {D.n}")
    spec = CycleSpectrum(q_max)
    for q in range(3, q_max + 1):
        spec.witnesses[q] = find_cycle(D, q, mode)
    return spec


def all_cycles_of_length(
    D: MultipartiteTournament, q: int, cap: int = 10**6
) -> tuple[list[CycleWitness], bool]:
    """All q-cycles up to rotation (at most cap), plus an exhausted flag."""
    if q < 3 or q > D.n:
        raise BadLength(f"cycle length {q} outside [3, {D.n}]")
    raw, exhausted = _backend(D.n).enumerate_cycles(D.out_mask, D.n, q, cap)
    return [CycleWitness(t) for t in raw], exhausted


def can_insert(D: MultipartiteTournament, C: CycleWitness, x: int) -> list[int]:
    """Cycle vertices v with v -> x and x -> v+ (insertion points for x)."""
    vs = C.vertices
    if x in vs:
        raise VertexOnCycle(f"vertex {x} lies on the cycle")
    k = len(vs)
    return [vs[i] for i in range(k) if D.has_arc(vs[i], x) and D.has_arc(x, vs[(i + 1) % k])]


def check_extension_range(
    D: MultipartiteTournament, C: CycleWitness, mode: str = "fast"
) -> ExtensionReport:
    """Check that a k-cycle meeting l < c parts forces t-cycles for k <= t <= c+(k-l).

    A violation falsifies the search engine (or the generator), never the
    underlying statement; it is reported, not raised.
    """
    k = len(C)
    l = C.parts_met(D)
    hi = min(D.c + (k - l), D.n)
    violations = [
        t for t in range(k, hi + 1) if find_cycle(D, t, mode) is None
    ]
    return ExtensionReport(k=k, l=l, required=(k, hi), violations=violations)
