# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cycle-search kernels for instances with at most 64 vertices.

Same anchored-DFS algorithms as ``_pykernel`` with uint64 bitsets; the
caller selects this backend at import time and falls back to the pure
implementation for larger instances.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

COMPILED = True

DEF MAXN = 64


cdef void _load(object out_py, uint64_t* out, int n):
    cdef int i
    for i in range(n):
        out[i] = <uint64_t> out_py[i]


cdef void _reach_levels(uint64_t* out, int anchor, uint64_t allowed, int q,
                        uint64_t* reach):
    cdef uint64_t seen = (<uint64_t> 1) << anchor
    cdef uint64_t frontier = seen
    cdef uint64_t nxt, m, b
    cdef int r, rr, v
    reach[0] = seen
    for r in range(1, q):
        nxt = 0
        m = allowed & ~seen
        while m:
            b = m & (~m + 1)
            v = __builtin_ctzll(b)
            if out[v] & frontier:
                nxt |= b
            m ^= b
        seen |= nxt
        reach[r] = seen
        frontier = nxt
        if nxt == 0:
            for rr in range(r + 1, q):
                reach[rr] = seen
            return


def find_cycle_pruned(object out_py, int n, int q):
    cdef uint64_t out[MAXN]
    cdef uint64_t reach[MAXN]
    cdef uint64_t cands[MAXN]
    cdef int path[MAXN]
    cdef uint64_t full, allowed, visited, c, b, first
    cdef int a, d, v

    _load(out_py, out, n)
    if n == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t> 1) << n) - 1
    for a in range(n - q + 1):
        allowed = (full >> (a + 1)) << (a + 1)
        _reach_levels(out, a, allowed | ((<uint64_t> 1) << a), q, reach)
        first = out[a] & allowed & reach[q - 1]
        if first == 0:
            continue
        path[0] = a
        cands[0] = first
        visited = (<uint64_t> 1) << a
        d = 0
        while True:
            c = cands[d]
            if c == 0:
                if d == 0:
                    break
                visited ^= (<uint64_t> 1) << path[d]
                d -= 1
                continue
            b = c & (~c + 1)
            cands[d] = c ^ b
            v = __builtin_ctzll(b)
            if d == q - 2:
                if (out[v] >> a) & 1:
                    path[d + 1] = v
                    return tuple([path[i] for i in range(q)])
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited & reach[q - d - 1]
    return None


def find_cycle_plain(object out_py, int n, int q):
    cdef uint64_t out[MAXN]
    cdef uint64_t cands[MAXN]
    cdef int path[MAXN]
    cdef uint64_t full, allowed, visited, c, b, first
    cdef int a, d, v

    _load(out_py, out, n)
    if n == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t> 1) << n) - 1
    for a in range(n - q + 1):
        allowed = (full >> (a + 1)) << (a + 1)
        first = out[a] & allowed
        if first == 0:
            continue
        path[0] = a
        cands[0] = first
        visited = (<uint64_t> 1) << a
        d = 0
        while True:
            c = cands[d]
            if c == 0:
                if d == 0:
                    break
                visited ^= (<uint64_t> 1) << path[d]
                d -= 1
                continue
            b = c & (~c + 1)
            cands[d] = c ^ b
            v = __builtin_ctzll(b)
            if d == q - 2:
                if (out[v] >> a) & 1:
                    path[d + 1] = v
                    return tuple([path[i] for i in range(q)])
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited
    return None


def enumerate_cycles(object out_py, int n, int q, long long cap):
    cdef uint64_t out[MAXN]
    cdef uint64_t reach[MAXN]
    cdef uint64_t cands[MAXN]
    cdef int path[MAXN]
    cdef uint64_t full, allowed, visited, c, b, first
    cdef int a, d, v

    found = []
    _load(out_py, out, n)
    if n == 64:
        full = <uint64_t> 0xFFFFFFFFFFFFFFFF
    else:
        full = ((<uint64_t> 1) << n) - 1
    for a in range(n - q + 1):
        allowed = (full >> (a + 1)) << (a + 1)
        _reach_levels(out, a, allowed | ((<uint64_t> 1) << a), q, reach)
        first = out[a] & allowed & reach[q - 1]
        if first == 0:
            continue
        path[0] = a
        cands[0] = first
        visited = (<uint64_t> 1) << a
        d = 0
        while True:
            c = cands[d]
            if c == 0:
                if d == 0:
                    break
                visited ^= (<uint64_t> 1) << path[d]
                d -= 1
                continue
            b = c & (~c + 1)
            cands[d] = c ^ b
            v = __builtin_ctzll(b)
            if d == q - 2:
                if (out[v] >> a) & 1:
                    path[d + 1] = v
                    found.append(tuple([path[i] for i in range(q)]))
                    if len(found) >= cap:
                        return found, True
                continue
            path[d + 1] = v
            visited |= b
            d += 1
            cands[d] = out[v] & allowed & ~visited & reach[q - d - 1]
    return found, False
