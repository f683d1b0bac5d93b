"""Pure-Python cycle-search kernels.

Bitmask-based DFS over simple paths anchored at the minimum-id vertex of
the cycle.  Works for arbitrary n (Python ints as bitsets); the compiled
kernel in ``_cykernel`` mirrors the pruned routines for n <= 64.

All routines return witnesses as vertex tuples starting at the anchor,
and the first witness found is the lexicographically smallest one
because anchors and candidate bits are scanned in ascending order.
"""

from __future__ import annotations

from typing import Optional, Sequence

COMPILED = False


def _reach_levels(out: Sequence[int], anchor: int, allowed: int, q: int) -> list[int]:
    """reach[r] = bitmask of allowed vertices within directed distance r of the anchor.

    Distances are measured along paths that stay inside *allowed* (which
    includes the anchor).  Used to prune branches that cannot close the
    cycle in the remaining number of arcs.
    """
    reach = [0] * q
    seen = 1 << anchor
    reach[0] = seen
    frontier = seen
    for r in range(1, q):
        nxt = 0
        rest = allowed & ~seen
        m = rest
        while m:
            b = m & -m
            if out[b.bit_length() - 1] & frontier:
                nxt |= b
            m ^= b
        seen |= nxt
        reach[r] = seen
        frontier = nxt
        if not nxt:
            for rr in range(r + 1, q):
                reach[rr] = seen
            break
    return reach


def find_cycle_pruned(out: Sequence[int], n: int, q: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest simple q-cycle, or None.

    Prunes with (a) anchor-minimality, (b) per-branch reachability back
    to the anchor within the remaining length budget.
    """
    full = (1 << n) - 1
    for a in range(n - q + 1):
        allowed = full >> (a + 1) << (a + 1)
        reach = _reach_levels(out, a, allowed | (1 << a), q)
        first = out[a] & allowed & reach[q - 1]
        if not first:
            continue
        path = [a] * q
        cands = [0] * q
        cands[0] = first
        visited = 1 << a
        d = 0
        while True:
            c = cands[d]
            if not c:
                if d == 0:
                    break
                visited ^= 1 << path[d]
                d -= 1
                continue
            b = c & -c
            cands[d] = c ^ b
            v = b.bit_length() - 1
            if d == q - 2:
                if out[v] >> a & 1:
                    path[d + 1] = v
                    return tuple(path)
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited & reach[q - d - 1]
    return None


def find_cycle_plain(out: Sequence[int], n: int, q: int) -> Optional[tuple[int, ...]]:
    """Oracle search: exhaustive anchored DFS with no reachability pruning."""
    full = (1 << n) - 1
    for a in range(n - q + 1):
        allowed = full >> (a + 1) << (a + 1)
        first = out[a] & allowed
        if not first:
            continue
        path = [a] * q
        cands = [0] * q
        cands[0] = first
        visited = 1 << a
        d = 0
        while True:
            c = cands[d]
            if not c:
                if d == 0:
                    break
                visited ^= 1 << path[d]
                d -= 1
                continue
            b = c & -c
            cands[d] = c ^ b
            v = b.bit_length() - 1
            if d == q - 2:
                if out[v] >> a & 1:
                    path[d + 1] = v
                    return tuple(path)
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited
    return None


def enumerate_cycles(
    out: Sequence[int], n: int, q: int, cap: int
) -> tuple[list[tuple[int, ...]], bool]:
    """All simple q-cycles up to rotation, ascending lexicographic order.

    Each cycle is reported once, anchored at its minimum vertex.  Returns
    (cycles, exhausted) where exhausted means the cap was hit.
    """
    found: list[tuple[int, ...]] = []
    full = (1 << n) - 1
    for a in range(n - q + 1):
        allowed = full >> (a + 1) << (a + 1)
        reach = _reach_levels(out, a, allowed | (1 << a), q)
        first = out[a] & allowed & reach[q - 1]
        if not first:
            continue
        path = [a] * q
        cands = [0] * q
        cands[0] = first
        visited = 1 << a
        d = 0
        while True:
            c = cands[d]
            if not c:
                if d == 0:
                    break
                visited ^= 1 << path[d]
                d -= 1
                continue
            b = c & -c
            cands[d] = c ^ b
            v = b.bit_length() - 1
            if d == q - 2:
                if out[v] >> a & 1:
                    path[d + 1] = v
                    found.append(tuple(path))
                    if len(found) >= cap:
                        return found, True
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited & reach[q - d - 1]
    return found, False
