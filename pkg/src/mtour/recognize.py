"""Structural recognition: membership in the W, Q and H families.

Membership is decided by reconstruct-and-regenerate rather than generic
isomorphism search: the templates are rigid enough that the order of
twin classes along the defining path (W, Q) or chain (H) can be
recovered by backtracking, and every member verdict is certified by
regenerating the template from the recovered parameters and comparing
arc-for-arc under an explicit vertex correspondence.

Reversal-case Q members are handled by repair: a candidate reversed twin
class is un-reversed against its partner block, the plain recognizer is
run on the repaired digraph, and the final verdict still requires exact
regeneration equality against the *original* input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .digraph import MultipartiteTournament, bits, build, is_rich, mask_of
from .errors import InvalidSpec, NotRich, NotStrong
from .families import (
    HSpec,
    QSpec,
    WSpec,
    gen_H,
    gen_Q,
    gen_W,
    h_blocks,
    q_blocks,
    residue,
    w_blocks,
)

NOT_MEMBER = "not_member"
MEMBER_OF_W = "member_of_w"
MEMBER_OF_Q = "member_of_q"
MEMBER_OF_H = "member_of_h"

# Backtracking budgets: generous for desk-scale templates, finite so that
# adversarial inputs cannot hang the recognizer.
_MAX_NODES = 2_000_000
_MAX_ORDERINGS = 20_000


@dataclass
class TwinQuotient:
    """Coarsest partition into twin classes plus the induced quotient."""

    classes: list[tuple[int, ...]]
    quotient: MultipartiteTournament
    class_of: tuple[int, ...]


@dataclass
class RecognitionResult:
    verdict: str
    spec: Optional[Union[WSpec, QSpec, HSpec]] = None
    correspondence: Optional[dict[int, int]] = None  # template id -> input id

    @property
    def is_member(self) -> bool:
        return self.verdict != NOT_MEMBER


def twin_quotient(D: MultipartiteTournament) -> TwinQuotient:
    """Maximal twin classes (same part, identical external neighbourhoods),
    ordered by minimum vertex id, with the quotient tournament on them."""
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(D.n):
        groups.setdefault((D.part_of[v], D.out_mask[v]), []).append(v)
    classes = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    class_of = [0] * D.n
    for idx, cls in enumerate(classes):
        for v in cls:
            class_of[v] = idx

    part_classes: dict[int, list[int]] = {}
    for idx, cls in enumerate(classes):
        part_classes.setdefault(D.part_of[cls[0]], []).append(idx)
    qarcs = [
        (a, b)
        for a, ca in enumerate(classes)
        for b, cb in enumerate(classes)
        if a != b and D.has_arc(ca[0], cb[0])
    ]
    quotient = build([part_classes[p] for p in sorted(part_classes)], qarcs)
    return TwinQuotient(classes=classes, quotient=quotient, class_of=tuple(class_of))


def _path_orderings(QT: MultipartiteTournament) -> Iterator[list[int]]:
    """Orderings y_1..y_M of the quotient classes with a forward arc between
    consecutive classes and every longer-range arc pointing from the higher
    position to the lower one (non-adjacency allowed at range >= 2)."""
    M, out = QT.n, QT.out_mask
    nodes = 0
    yielded = 0
    order: list[int] = []

    def rec(placed: int, dom: int) -> Iterator[list[int]]:
        # dom: union of out-masks of all placed classes except the last one;
        # a candidate must not be dominated by any of those.
        nonlocal nodes, yielded
        if len(order) == M:
            yield list(order)
            yielded += 1
            return
        last = order[-1]
        cands = out[last] & ~placed & ~dom
        while cands:
            b = cands & -cands
            cands ^= b
            nodes += 1
            if nodes > _MAX_NODES or yielded >= _MAX_ORDERINGS:
                return
            order.append(b.bit_length() - 1)
            yield from rec(placed | b, dom | out[last])
            order.pop()

    for start in range(M):
        order.append(start)
        yield from rec(1 << start, 0)
        order.pop()


def _mapped_equal(
    T: MultipartiteTournament, D: MultipartiteTournament, corr: dict[int, int]
) -> bool:
    """True iff corr maps the template's arc relation exactly onto D's."""
    if T.n != D.n or len(corr) != T.n or len(set(corr.values())) != T.n:
        return False
    for u in range(T.n):
        mapped = mask_of(corr[v] for v in bits(T.out_mask[u]))
        if mapped != D.out_mask[corr[u]]:
            return False
    return True


def _block_correspondence(
    blocks: list[list[int]], members: list[tuple[int, ...]]
) -> dict[int, int]:
    """Map template block ids onto sorted member ids, block by block."""
    corr: dict[int, int] = {}
    for blk, mem in zip(blocks, members):
        for t_id, d_id in zip(blk, sorted(mem)):
            corr[t_id] = d_id
    return corr


# ---------------------------------------------------------------------------
# W recognition
# ---------------------------------------------------------------------------


def recognize_W(D: MultipartiteTournament) -> RecognitionResult:
    """Membership in the W family, by quotient-order reconstruction."""
    if not is_rich(D):
        return RecognitionResult(NOT_MEMBER)
    tq = twin_quotient(D)
    M, c = tq.quotient.n, D.c
    if M < c:
        return RecognitionResult(NOT_MEMBER)
    best: Optional[RecognitionResult] = None
    best_key = None
    for order in _path_orderings(tq.quotient):
        blowup = {
            pos + 1: len(tq.classes[cls])
            for pos, cls in enumerate(order)
            if len(tq.classes[cls]) > 1
        }
        try:
            spec = WSpec(c=c, m=M, blowup=blowup)
            T = gen_W(spec)
        except (InvalidSpec, NotRich):
            continue
        corr = _block_correspondence(w_blocks(spec), [tq.classes[cls] for cls in order])
        if _mapped_equal(T, D, corr):
            key = (spec.m, tuple(sorted(blowup.items())))
            if best is None or key < best_key:
                best, best_key = RecognitionResult(MEMBER_OF_W, spec, corr), key
    return best if best is not None else RecognitionResult(NOT_MEMBER)


# ---------------------------------------------------------------------------
# Q recognition
# ---------------------------------------------------------------------------


def _merged_residue_candidates(
    D: MultipartiteTournament,
    tq: TwinQuotient,
    order: list[int],
    c: int,
) -> list[tuple[int, int]]:
    """Candidate (s, t) pairs for an ordering: the two residues (mod c+1)
    whose classes share one partite set of D."""
    part_of_res: dict[int, set[int]] = {}
    for pos, cls in enumerate(order, start=1):
        part_of_res.setdefault(residue(pos, c + 1), set()).add(
            D.part_of[tq.classes[cls][0]]
        )
    res_part: dict[int, int] = {}
    for r, ps in part_of_res.items():
        if len(ps) != 1:
            return []
        res_part[r] = next(iter(ps))
    by_part: dict[int, list[int]] = {}
    for r, p in res_part.items():
        by_part.setdefault(p, []).append(r)
    merged = [sorted(rs) for rs in by_part.values() if len(rs) > 1]
    if len(merged) == 1 and len(merged[0]) == 2:
        return [(merged[0][0], merged[0][1])]
    if not merged:
        # every populated residue has its own part: (s, t) underdetermined,
        # try every valid pair (only reachable for very short paths)
        return [
            (s, t)
            for s in range(1, c + 1)
            for t in range(s + 2, c + 2)
            if t - s != c
        ]
    return []


def _match_q_plain(
    D: MultipartiteTournament, tq: TwinQuotient
) -> Iterator[tuple[QSpec, dict[int, int]]]:
    """All plain (reversal-free) Q matches of D, as (spec, correspondence)."""
    M, c = tq.quotient.n, D.c
    if M < c:
        return
    for order in _path_orderings(tq.quotient):
        blowup = {
            pos + 1: len(tq.classes[cls])
            for pos, cls in enumerate(order)
            if len(tq.classes[cls]) > 1
        }
        for s, t in _merged_residue_candidates(D, tq, order, c):
            try:
                spec = QSpec(c=c, m=M, s=s, t=t, blowup=blowup)
                T = gen_Q(spec)
            except (InvalidSpec, NotRich):
                continue
            corr = _block_correspondence(
                q_blocks(spec), [tq.classes[cls] for cls in order]
            )
            if _mapped_equal(T, D, corr):
                yield spec, corr


def _flip_between(
    D: MultipartiteTournament, A: tuple[int, ...], B: tuple[int, ...]
) -> MultipartiteTournament:
    """Copy of D with every arc between vertex sets A and B reversed."""
    am, bm = mask_of(A), mask_of(B)
    arcs = [
        ((v, u) if ((1 << u) & am and (1 << v) & bm) or ((1 << u) & bm and (1 << v) & am) else (u, v))
        for u, v in D.arcs()
    ]
    return build([list(p) for p in D.parts], arcs)


def _match_q_reversal(
    D: MultipartiteTournament, tq: TwinQuotient
) -> Iterator[tuple[QSpec, dict[int, int]]]:
    """Q matches that need one reversal bundle.

    For every pair of same-part twin classes whose out-neighbourhoods
    differ by exactly the member set of one other class, un-reverse the
    suspected reversed class against that partner, recognize the repaired
    digraph as a plain member, then re-check the original input against
    the regenerated reversal-case template.
    """
    classes = tq.classes
    masks = [mask_of(cls) for cls in classes]
    c = D.c
    for a, A in enumerate(classes):
        for b in range(a + 1, len(classes)):
            B = classes[b]
            if D.part_of[A[0]] != D.part_of[B[0]]:
                continue
            diff = D.out_mask[A[0]] ^ D.out_mask[B[0]]
            partner = next(
                (k for k, km in enumerate(masks) if km == diff and k not in (a, b)),
                None,
            )
            if partner is None:
                continue
            C0 = classes[partner]
            # either A or B is the reversed sub-block; try both roles
            for rev, plain in ((a, b), (b, a)):
                R, P = classes[rev], classes[plain]
                repaired = _flip_between(D, R, C0)
                yield from _assemble_reversal(D, repaired, R, P, C0)


def _assemble_reversal(
    D: MultipartiteTournament,
    repaired: MultipartiteTournament,
    R: tuple[int, ...],
    P: tuple[int, ...],
    C0: tuple[int, ...],
) -> Iterator[tuple[QSpec, dict[int, int]]]:
    """Turn a plain match of the repaired digraph into a reversal-case match."""
    merged_ids = set(P) | set(R)
    for spec_plain, corr_plain in _match_q_plain(repaired, twin_quotient(repaired)):
        blocks = q_blocks(spec_plain)
        # invert the correspondence: template block -> input member ids
        members = [[corr_plain[t] for t in blk] for blk in blocks]
        split_pos = next(
            (
                pos + 1
                for pos, mem in enumerate(members)
                if set(mem) == merged_ids
            ),
            None,
        )
        partner_pos = next(
            (pos + 1 for pos, mem in enumerate(members) if set(mem) == set(C0)),
            None,
        )
        if split_pos is None or partner_pos is None:
            continue
        m = spec_plain.m
        case = {
            (2, 3): 1,
            (1, 2): 2,
            (m - 1, m - 2): 3,
            (m, m - 1): 4,
        }.get((partner_pos, split_pos))
        if case is None:
            continue
        try:
            spec = QSpec(
                c=spec_plain.c,
                m=m,
                s=spec_plain.s,
                t=spec_plain.t,
                blowup=spec_plain.blowup,
                reversal=case,
                reversal_count=len(R),
            )
            T = gen_Q(spec)
        except (InvalidSpec, NotRich):
            continue
        # plain twins occupy the head of the split block, reversed twins the tail
        corr = dict(corr_plain)
        split_blk = blocks[split_pos - 1]
        for t_id, d_id in zip(split_blk, sorted(P) + sorted(R)):
            corr[t_id] = d_id
        if _mapped_equal(T, D, corr):
            yield spec, corr


def recognize_Q(D: MultipartiteTournament) -> RecognitionResult:
    """Membership in the Q family (plain or one reversal bundle)."""
    if not is_rich(D) or D.c < 8:
        return RecognitionResult(NOT_MEMBER)
    tq = twin_quotient(D)
    best: Optional[RecognitionResult] = None
    best_key = None
    for spec, corr in _match_q_plain(D, tq):
        key = spec.param_tuple()
        if best is None or key < best_key:
            best, best_key = RecognitionResult(MEMBER_OF_Q, spec, corr), key
    if best is not None:
        return best
    for spec, corr in _match_q_reversal(D, tq):
        key = spec.param_tuple()
        if best is None or key < best_key:
            best, best_key = RecognitionResult(MEMBER_OF_Q, spec, corr), key
    return best if best is not None else RecognitionResult(NOT_MEMBER)


# ---------------------------------------------------------------------------
# H recognition
# ---------------------------------------------------------------------------


def _chain_order(D: MultipartiteTournament, frags: list[list[int]]) -> Optional[list[int]]:
    """Total dominance order over vertex-set fragments, or None.

    Requires every fragment pair to be homogeneous (all arcs one way) and
    the induced tournament on fragments to be transitive.
    """
    masks = [mask_of(f) for f in frags]
    k = len(frags)
    wins = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            ij = all(D.out_mask[u] & masks[j] == masks[j] for u in frags[i])
            ji = all(D.out_mask[u] & masks[i] == masks[i] for u in frags[j])
            if ij:
                wins[i] += 1
            elif ji:
                wins[j] += 1
            else:
                return None
    order = sorted(range(k), key=lambda i: -wins[i])
    if [wins[i] for i in order] != list(range(k - 1, -1, -1)):
        return None
    return order


def recognize_H(D: MultipartiteTournament) -> RecognitionResult:
    """Membership in the H family.

    Scans candidate special vertices in ascending id order; the first one
    whose removal leaves a transitive chain of partite fragments (with the
    candidate's own fragment at an admissible interior position) wins.
    """
    if not is_rich(D) or D.c < 8:
        return RecognitionResult(NOT_MEMBER)
    c = D.c
    for v in range(D.n):
        frags = [[u for u in p if u != v] for p in D.parts]
        order = _chain_order(D, frags)
        if order is None:
            continue
        pos = order.index(D.part_of[v])
        i = pos + 2  # chain position 1..c maps to class labels 2..c+1
        if not (2 < i < c - 1):
            continue
        sizes = {k + 2: len(frags[order[k]]) for k in range(c)}
        spec_blocks_members = [sorted(frags[order[k]]) for k in range(c)]
        outside = [
            u for k in range(c) if k + 2 != i for u in spec_blocks_members[k]
        ]
        orientation = tuple(D.has_arc(v, u) for u in outside)
        try:
            spec = HSpec(c=c, i=i, sizes=sizes, v1_orientation=orientation)
            T = gen_H(spec)
        except (InvalidSpec, NotStrong):
            continue
        blocks = h_blocks(spec)
        corr = {0: v}
        for k in range(c):
            for t_id, d_id in zip(blocks[k + 2], spec_blocks_members[k]):
                corr[t_id] = d_id
        if _mapped_equal(T, D, corr):
            return RecognitionResult(MEMBER_OF_H, spec, corr)
    return RecognitionResult(NOT_MEMBER)


def recognize(D: MultipartiteTournament) -> RecognitionResult:
    """Membership in the no-(c+2)-cycle families: H first, then Q."""
    res = recognize_H(D)
    if res.is_member:
        return res
    return recognize_Q(D)
