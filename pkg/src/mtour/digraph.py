"""Validated multipartite tournaments with packed-bitmask adjacency.

Vertices are dense integer ids 0..n-1 and parts are indexed 0..c-1
internally (human-facing output uses 1-based labels).  Adjacency is one
Python int bitmask per vertex, which gives O(1) arc tests and
word-parallel neighbourhood arithmetic for any n.  Instances are
immutable after construction.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DoubleArc,
    EmptyPart,
    IntraPartArc,
    InvalidSpec,
    MissingArc,
    NotStrong,
    OverlappingSets,
)


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class MultipartiteTournament:
    """An orientation of a complete multipartite graph."""

    __slots__ = ("n", "c", "parts", "part_of", "out_mask", "in_mask")

    def __init__(self, parts: Sequence[Sequence[int]], arcs: Iterable[tuple[int, int]]):
        pts = [tuple(sorted(p)) for p in parts]
        for p in pts:
            if not p:
                raise EmptyPart("every partite set must be non-empty")
        n = sum(len(p) for p in pts)
        seen: set[int] = set()
        for p in pts:
            seen.update(p)
        if seen != set(range(n)):
            raise InvalidSpec("vertex ids must be dense 0..n-1 without repeats")

        part_of = [0] * n
        for idx, p in enumerate(pts):
            for v in p:
                part_of[v] = idx

        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSpec(f"arc ({u},{v}) out of range")
            if u == v or part_of[u] == part_of[v]:
                raise IntraPartArc(f"arc ({u},{v}) joins vertices of one part")
            if (out[u] >> v & 1) or (out[v] >> u & 1):
                raise DoubleArc(f"pair ({u},{v}) oriented twice")
            out[u] |= 1 << v

        part_mask = [mask_of(p) for p in pts]
        full = (1 << n) - 1
        inm = [0] * n
        for u in range(n):
            cross = full & ~part_mask[part_of[u]]
            adj = out[u] | mask_of(w for w in bits(cross) if out[w] >> u & 1)
            if adj != cross:
                missing = next(bits(cross & ~adj))
                raise MissingArc(f"pair ({u},{missing}) has no arc")
        for u in range(n):
            for v in bits(out[u]):
                inm[v] |= 1 << u

        self.n = n
        self.c = len(pts)
        self.parts = tuple(pts)
        self.part_of = tuple(part_of)
        self.out_mask = tuple(out)
        self.in_mask = tuple(inm)

    # -- basic queries -------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_neighbors(self, u: int) -> Iterator[int]:
        return bits(self.out_mask[u])

    def in_neighbors(self, u: int) -> Iterator[int]:
        return bits(self.in_mask[u])

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.out_mask[u]):
                yield (u, v)

    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_mask)

    def part_mask(self, idx: int) -> int:
        return mask_of(self.parts[idx])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultipartiteTournament):
            return NotImplemented
        return self.parts == other.parts and self.out_mask == other.out_mask

    def __hash__(self) -> int:
        return hash((self.parts, self.out_mask))

    def __repr__(self) -> str:
        return f"MultipartiteTournament(n={self.n}, c={self.c}, arcs={self.arc_count()})"


def build(parts: Sequence[Sequence[int]], arcs: Iterable[tuple[int, int]]) -> MultipartiteTournament:
    """Validate and construct a multipartite tournament."""
    return MultipartiteTournament(parts, arcs)


def _closure(masks: Sequence[int], start: int) -> int:
    """Set of vertices reachable from *start* following *masks*, as a bitmask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_strong(D: MultipartiteTournament) -> bool:
    """True iff D is strongly connected."""
    if D.n == 1:
        return True
    full = (1 << D.n) - 1
    return _closure(D.out_mask, 0) == full and _closure(D.in_mask, 0) == full


def is_rich(D: MultipartiteTournament) -> bool:
    """True iff D is strong and every partite set has at least two vertices."""
    return min(len(p) for p in D.parts) >= 2 and is_strong(D)


def dist(D: MultipartiteTournament, u: int, v: int) -> Optional[int]:
    """BFS shortest directed path length from u to v, or None if unreachable."""
    if u == v:
        raise InvalidSpec("dist requires distinct endpoints")
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= D.out_mask[w]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return None


def distances_from(D: MultipartiteTournament, u: int) -> list[Optional[int]]:
    """All BFS distances from u (None where unreachable, 0 at u)."""
    out: list[Optional[int]] = [None] * D.n
    out[u] = 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= D.out_mask[w]
        nxt &= ~seen
        for w in bits(nxt):
            out[w] = d
        seen |= nxt
        frontier = nxt
    return out


def diam(D: MultipartiteTournament) -> int:
    """Maximum distance over ordered vertex pairs; raises NotStrong if any is unreachable."""
    best = 0
    for u in range(D.n):
        ds = distances_from(D, u)
        for v, d in enumerate(ds):
            if d is None:
                raise NotStrong(f"vertex {v} unreachable from {u}")
            best = max(best, d)
    return best


def dominates(D: MultipartiteTournament, X: Iterable[int], Y: Iterable[int]) -> bool:
    """True iff every vertex of X dominates every vertex of Y."""
    xm, ym = mask_of(X), mask_of(Y)
    if xm & ym:
        raise OverlappingSets("dominance sets must be disjoint")
    return all(D.out_mask[x] & ym == ym for x in bits(xm))


def no_arc_back(D: MultipartiteTournament, X: Iterable[int], Y: Iterable[int]) -> bool:
    """True iff there is no arc from a vertex of Y to a vertex of X."""
    xm, ym = mask_of(X), mask_of(Y)
    if xm & ym:
        raise OverlappingSets("dominance sets must be disjoint")
    return all(D.out_mask[y] & xm == 0 for y in bits(ym))
