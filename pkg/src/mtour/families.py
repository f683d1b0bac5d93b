"""Deterministic generators for the structure families plus seeded fuzz input.

Template conventions shared by the path-based families (W and Q):

* template indices are 1..m along the path x_1 ... x_m;
* path arcs x_i -> x_{i+1}; every other arc between adjacent template
  indices points from the higher index to the lower one;
* partite sets are residue classes of the template index (mod c for W,
  mod c+1 for Q, with the two merged residues s,t sharing one part);
* a blow-up replaces a template vertex by a set of twins that copy all
  external adjacencies and share its part.

Vertex ids are assigned contiguously in template order, so the block of
ids belonging to template index i is recoverable from the spec alone
(see ``w_blocks`` / ``q_blocks`` / ``h_blocks``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .digraph import MultipartiteTournament, build, is_rich, is_strong
from .errors import GaveUp, InvalidSpec, NotRich, NotStrong


def residue(i: int, mod: int) -> int:
    """1-based residue class of template index i, in [1, mod]."""
    return (i - 1) % mod + 1


# ---------------------------------------------------------------------------
# W family (no (c+1)-cycle characterization)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WSpec:
    c: int
    m: int
    blowup: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.c < 5:
            raise InvalidSpec("W requires c >= 5")
        if self.m < self.c:
            raise InvalidSpec("W requires m >= c")
        allowed = {1, 2, self.m - 1, self.m}
        for i, size in self.blowup.items():
            if i not in allowed:
                raise InvalidSpec(f"W blow-up index {i} not in {{1,2,m-1,m}}")
            if size < 2:
                raise InvalidSpec("blow-up sizes must be >= 2")

    def sizes(self) -> list[int]:
        return [self.blowup.get(i, 1) for i in range(1, self.m + 1)]


def _blocks(sizes: Sequence[int]) -> list[list[int]]:
    out, nxt = [], 0
    for s in sizes:
        out.append(list(range(nxt, nxt + s)))
        nxt += s
    return out


def w_blocks(spec: WSpec) -> list[list[int]]:
    """Vertex ids of each template index, 0-based list position = index-1."""
    return _blocks(spec.sizes())


def _path_family_arcs(
    blocks: Sequence[Sequence[int]], adjacent, forward
) -> list[tuple[int, int]]:
    """Arcs of a blown-up path template.

    adjacent(i, j) and forward(i, j) decide, for template indices i < j,
    whether the pair is adjacent and whether the arc runs i -> j.
    """
    arcs = []
    m = len(blocks)
    for j in range(2, m + 1):
        for i in range(1, j):
            if not adjacent(i, j):
                continue
            if forward(i, j):
                pairs = ((u, v) for u in blocks[i - 1] for v in blocks[j - 1])
            else:
                pairs = ((v, u) for u in blocks[i - 1] for v in blocks[j - 1])
            arcs.extend(pairs)
    return arcs


def gen_W(spec: WSpec) -> MultipartiteTournament:
    """Blown-up member of the W family; raises NotRich if any part stays small."""
    blocks = w_blocks(spec)
    c = spec.c

    def adjacent(i, j):
        return j - i == 1 or residue(i, c) != residue(j, c)

    def forward(i, j):
        return j - i == 1  # all longer arcs point from the later index back

    arcs = _path_family_arcs(blocks, adjacent, forward)
    parts: dict[int, list[int]] = {}
    for i, blk in enumerate(blocks, start=1):
        parts.setdefault(residue(i, c), []).extend(blk)
    D = build([parts[r] for r in sorted(parts)], arcs)
    if not is_rich(D):
        raise NotRich(f"W(c={c}, m={spec.m}) with blow-up {spec.blowup} is not rich")
    return D


# ---------------------------------------------------------------------------
# Q family (no (c+2)-cycle characterization, path branch)
# ---------------------------------------------------------------------------


REVERSAL_CASES = (1, 2, 3, 4)

# Per reversal case: (tail template index, head template index) of the
# reversed arc bundle, where the *head* side is split and only the last
# ``reversal_count`` twins of the head block... see QSpec docstring.


@dataclass(frozen=True)
class QSpec:
    """Parameters of a Q-family member.

    ``reversal`` is None or a case in 1..4.  The reversed arcs run
    between the two consecutive template blocks named by the case:

    * case 1: (A_2, A_3)-arcs, requires (s, t) = (1, 3);
    * case 2: (A_1, A_2)-arcs, requires (s, t) = (2, c+1);
    * case 3: (A_{m-2}, A_{m-1})-arcs, requires {m-2, m} = {s, t} mod c+1;
    * case 4: (A_{m-1}, A_m)-arcs, requires {m-1, m-c} = {s, t} mod c+1.

    Reversing the whole bundle would leave the tail block with no
    out-neighbour (cases 1, 2) or the head block with no in-neighbour
    (cases 3, 4), so no such digraph is strong.  The reversal therefore
    splits one designated block and reverses the bundle arcs incident to
    its last ``reversal_count`` twins only: the head block for cases 1
    and 2, the tail block for cases 3 and 4.  The split block must keep
    at least one plain twin.
    """

    c: int
    m: int
    s: int
    t: int
    blowup: dict[int, int] = field(default_factory=dict)
    reversal: Optional[int] = None
    reversal_count: int = 1

    def __post_init__(self):
        c, m, s, t = self.c, self.m, self.s, self.t
        if c < 8:
            raise InvalidSpec("Q requires c >= 8")
        if m < c:
            raise InvalidSpec("Q requires m >= c")
        if not (1 <= s < t - 1 <= c):
            raise InvalidSpec("Q requires 1 <= s < t-1 <= c")
        if t - s == c:
            raise InvalidSpec("merged residues must not contain consecutive path indices")
        allowed = self.allowed_blowup_indices()
        for i, size in self.blowup.items():
            if i not in allowed:
                raise InvalidSpec(f"Q blow-up index {i} not allowed for these parameters")
            if size < 2:
                raise InvalidSpec("blow-up sizes must be >= 2")
        if self.reversal is not None:
            if self.reversal not in REVERSAL_CASES:
                raise InvalidSpec(f"unknown reversal case {self.reversal}")
            if not self._reversal_applicable(self.reversal):
                raise InvalidSpec(f"reversal case {self.reversal} not applicable to (s,t,m)")
            split = self.split_block_index()
            if self.reversal_count < 1:
                raise InvalidSpec("reversal_count must be >= 1")
            if self.reversal_count >= self.blowup.get(split, 1):
                raise InvalidSpec(
                    f"reversal needs a blow-up at index {split} larger than reversal_count"
                )

    def allowed_blowup_indices(self) -> set[int]:
        c, m, s, t = self.c, self.m, self.s, self.t
        allowed = {1, 2, m - 1, m}
        if s == 1 and t in (3, 4):
            allowed.add(t)
        if {residue(m, c + 1), residue(m - 2, c + 1)} == {s, t}:
            allowed.add(m - 2)
        if {residue(m, c + 1), residue(m - 3, c + 1)} == {s, t}:
            allowed.add(m - 3)
        return allowed

    def _reversal_applicable(self, case: int) -> bool:
        c, m, s, t = self.c, self.m, self.s, self.t
        if case == 1:
            return (s, t) == (1, 3)
        if case == 2:
            return (s, t) == (2, c + 1)
        if case == 3:
            return {residue(m - 2, c + 1), residue(m, c + 1)} == {s, t}
        return {residue(m - 1, c + 1), residue(m - c, c + 1)} == {s, t}

    def reversal_pair(self) -> tuple[int, int]:
        """(tail, head) template indices of the reversed arc bundle."""
        return {
            1: (2, 3),
            2: (1, 2),
            3: (self.m - 2, self.m - 1),
            4: (self.m - 1, self.m),
        }[self.reversal]

    def split_block_index(self) -> int:
        """Template index whose block is split into plain and reversed twins."""
        tail, head = self.reversal_pair()
        return head if self.reversal in (1, 2) else tail

    def sizes(self) -> list[int]:
        return [self.blowup.get(i, 1) for i in range(1, self.m + 1)]

    def param_tuple(self) -> tuple:
        return (
            self.m,
            self.s,
            self.t,
            self.reversal or 0,
            self.reversal_count if self.reversal else 0,
            tuple(sorted(self.blowup.items())),
        )


def q_blocks(spec: QSpec) -> list[list[int]]:
    return _blocks(spec.sizes())


def _q_adjacent(i: int, j: int, c: int, s: int, t: int) -> bool:
    ri, rj = residue(i, c + 1), residue(j, c + 1)
    if ri == rj:
        return False
    if {ri, rj} == {s, t}:
        return False
    return True


def gen_Qprime(c: int, m: int) -> MultipartiteTournament:
    """The unmerged (c+1)-residue path template, no blow-ups."""
    if m < c:
        raise InvalidSpec("Q' requires m >= c")
    blocks = _blocks([1] * m)

    def adjacent(i, j):
        return residue(i, c + 1) != residue(j, c + 1)

    def forward(i, j):
        return j - i == 1

    arcs = _path_family_arcs(blocks, adjacent, forward)
    parts: dict[int, list[int]] = {}
    for i in range(1, m + 1):
        parts.setdefault(residue(i, c + 1), []).append(i - 1)
    return build([parts[r] for r in sorted(parts)], arcs)


def gen_Q(spec: QSpec) -> MultipartiteTournament:
    """Member of the Q family; validates richness only (cycle facts are the
    harness's job)."""
    blocks = q_blocks(spec)
    c, s, t = spec.c, spec.s, spec.t

    def adjacent(i, j):
        return _q_adjacent(i, j, c, s, t)

    def forward(i, j):
        return j - i == 1

    arcs = _path_family_arcs(blocks, adjacent, forward)

    if spec.reversal is not None:
        tail, head = spec.reversal_pair()
        split = spec.split_block_index()
        split_blk = blocks[split - 1]
        reversed_ids = set(split_blk[-spec.reversal_count :])
        other = head if split == tail else tail
        other_ids = set(blocks[other - 1])

        def flips(u, v):
            # bundle arcs run tail -> head; flip those touching a reversed twin
            if v in reversed_ids and u in other_ids:
                return True
            if u in reversed_ids and v in other_ids:
                return True
            return False

        arcs = [(v, u) if flips(u, v) else (u, v) for u, v in arcs]

    parts: dict[int, list[int]] = {}
    for i, blk in enumerate(blocks, start=1):
        r = residue(i, c + 1)
        key = min(s, t) if r in (s, t) else r
        parts.setdefault(key, []).extend(blk)
    D = build([parts[r] for r in sorted(parts)], arcs)
    if not is_rich(D):
        raise NotRich(
            f"Q(c={c}, m={spec.m}, s={s}, t={t}, reversal={spec.reversal}) is not rich"
        )
    return D


# ---------------------------------------------------------------------------
# H family (chain branch)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HSpec:
    """Chain classes V_2 -> ... -> V_{c+1} with all cross arcs forward, one
    special vertex v1 merged into the class at chain position i, and v1's
    arcs to everything outside that class given by an orientation vector
    (True = v1 dominates), indexed by ascending vertex id."""

    c: int
    i: int
    sizes: dict[int, int]
    v1_orientation: tuple[bool, ...]

    def __post_init__(self):
        c, i = self.c, self.i
        if c < 8:
            raise InvalidSpec("H requires c >= 8")
        if not (2 < i < c - 1):
            raise InvalidSpec("H requires 2 < i < c-1")
        if set(self.sizes) != set(range(2, c + 2)):
            raise InvalidSpec("H sizes must cover chain classes 2..c+1")
        for j, size in self.sizes.items():
            low = 1 if j == i else 2
            if size < low:
                raise InvalidSpec(f"|V_{j}| must be >= {low}")
        n_outside = sum(sz for j, sz in self.sizes.items() if j != i)
        if len(self.v1_orientation) != n_outside:
            raise InvalidSpec("orientation vector length must match vertices outside V_i")


def h_blocks(spec: HSpec) -> dict[int, list[int]]:
    """Chain class -> vertex ids; v1 is always vertex 0."""
    blocks = {}
    nxt = 1
    for j in range(2, spec.c + 2):
        blocks[j] = list(range(nxt, nxt + spec.sizes[j]))
        nxt += spec.sizes[j]
    return blocks


def gen_H(spec: HSpec) -> MultipartiteTournament:
    """Member of the H family; raises NotStrong if the orientation vector
    fails to make the digraph strong."""
    blocks = h_blocks(spec)
    arcs: list[tuple[int, int]] = []
    for j1 in range(2, spec.c + 2):
        for j2 in range(j1 + 1, spec.c + 2):
            arcs.extend((u, v) for u in blocks[j1] for v in blocks[j2])
    outside = [v for j in range(2, spec.c + 2) if j != spec.i for v in blocks[j]]
    for v, dominated in zip(outside, spec.v1_orientation):
        arcs.append((0, v) if dominated else (v, 0))

    parts = [[0] + blocks[spec.i]]
    parts.extend(blocks[j] for j in range(2, spec.c + 2) if j != spec.i)
    D = build(parts, arcs)
    if not is_strong(D):
        raise NotStrong("v1 orientation does not make the chain strong")
    return D


def random_strong_hspec(
    c: int, i: int, sizes: dict[int, int], seed: int, max_tries: int = 200
) -> HSpec:
    """Seeded search for an orientation vector that makes gen_H strong."""
    rng = random.Random(seed)
    n_outside = sum(sz for j, sz in sizes.items() if j != i)
    for _ in range(max_tries):
        vec = tuple(rng.random() < 0.5 for _ in range(n_outside))
        spec = HSpec(c=c, i=i, sizes=dict(sizes), v1_orientation=vec)
        try:
            gen_H(spec)
        except NotStrong:
            continue
        return spec
    raise GaveUp(f"no strong orientation found in {max_tries} tries (seed={seed})")


# ---------------------------------------------------------------------------
# Seeded random rich instances
# ---------------------------------------------------------------------------


def random_rich(
    c: int,
    part_sizes: Sequence[int],
    seed: int,
    max_tries: int = 1000,
) -> MultipartiteTournament:
    """Uniformly oriented rich instance, deterministic per seed."""
    if c < 5:
        raise InvalidSpec("random_rich requires c >= 5")
    if len(part_sizes) != c or min(part_sizes) < 2:
        raise InvalidSpec("need c part sizes, all >= 2")
    rng = random.Random(seed)
    parts = _blocks(part_sizes)
    part_of = {v: idx for idx, blk in enumerate(parts) for v in blk}
    n = sum(part_sizes)
    cross = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part_of[u] != part_of[v]
    ]
    for _ in range(max_tries):
        arcs = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in cross]
        D = build(parts, arcs)
        if is_rich(D):
            return D
    raise GaveUp(f"no rich orientation found in {max_tries} tries (seed={seed})")
