"""Shared test utilities."""

import random

from mtour.digraph import MultipartiteTournament, build


def relabel(D: MultipartiteTournament, seed: int) -> MultipartiteTournament:
    """Apply a seeded random vertex permutation and part shuffle."""
    rng = random.Random(seed)
    perm = list(range(D.n))
    rng.shuffle(perm)
    parts = [[perm[v] for v in p] for p in D.parts]
    rng.shuffle(parts)
    return build(parts, [(perm[u], perm[v]) for u, v in D.arcs()])


def random_instance(seed: int, max_n: int = 14, c_range=(3, 6)) -> MultipartiteTournament:
    """Seeded random multipartite tournament (not necessarily strong)."""
    rng = random.Random(seed)
    c = rng.randint(*c_range)
    sizes = [rng.randint(1, 3) for _ in range(c)]
    while sum(sizes) > max_n:
        sizes[sizes.index(max(sizes))] -= 1
    sizes = [max(1, s) for s in sizes]
    nxt = 0
    parts = []
    for s in sizes:
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    n = nxt
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return build(parts, arcs)
