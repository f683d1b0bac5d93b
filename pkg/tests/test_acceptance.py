"""Acceptance suite: eleven desk-scale verification criteria.

Each test prints exactly one pass/fail line.  The grids are built once
per session and shared; witness cycles found along the way feed the
extension-range criterion.
"""

import sys

import pytest

from helpers import relabel, random_instance

from mtour.cycles import (
    all_cycles_of_length,
    can_insert,
    check_extension_range,
    find_cycle,
)
from mtour.digraph import bits, diam, is_rich, mask_of
from mtour.errors import InvalidSpec, NotRich
from mtour.families import (
    QSpec,
    WSpec,
    gen_H,
    gen_Q,
    gen_W,
    random_rich,
    random_strong_hspec,
)
from mtour.harness import perturb
from mtour.recognize import (
    MEMBER_OF_H,
    MEMBER_OF_Q,
    MEMBER_OF_W,
    recognize,
    recognize_W,
)

C = 8


def _line(num: int, ok: bool, text: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:>2}: {status} — {text}", file=sys.stderr)


# ---------------------------------------------------------------------------
# Shared corpora
# ---------------------------------------------------------------------------


def _h_grid():
    grid = []
    for i in (3, 4, 5, 6):
        variants = [
            {j: (1 if j == i else 2) for j in range(2, C + 2)},
            {j: (2 if j == i else 2) for j in range(2, C + 2)},
            {j: (1 if j == i else 3 if j == 2 else 2) for j in range(2, C + 2)},
        ]
        for vi, sizes in enumerate(variants):
            for k in range(5):
                spec = random_strong_hspec(C, i, sizes, seed=1000 * i + 100 * vi + k)
                grid.append((f"h:i={i},v={vi},k={k}", gen_H(spec), spec))
    return grid


def _q_grid():
    grid = []
    for m in range(18, 23):
        std = {1: 2, 2: 2, m - 1: 2, m: 2}
        pairs = [
            (s, t)
            for s in range(1, C + 1)
            for t in range(s + 2, C + 2)
            if t - s != C
        ]
        for s, t in pairs:
            spec = QSpec(c=C, m=m, s=s, t=t, blowup=dict(std))
            grid.append((f"q:m={m},s={s},t={t}", gen_Q(spec), spec))
        # extra allowed blow-ups beyond the four path ends
        for s, t in pairs:
            probe = QSpec(c=C, m=m, s=s, t=t)
            for idx in sorted(probe.allowed_blowup_indices() - {1, 2, m - 1, m}):
                bl = dict(std)
                bl[idx] = 2
                spec = QSpec(c=C, m=m, s=s, t=t, blowup=bl)
                grid.append((f"q:m={m},s={s},t={t},bl={idx}", gen_Q(spec), spec))
        # every reversal case applicable at this m
        for case in (1, 2, 3, 4):
            for s, t in pairs:
                probe = QSpec(c=C, m=m, s=s, t=t)
                if not probe._reversal_applicable(case):
                    continue
                spl = {1: (2, 3), 2: (1, 2), 3: (m - 2, m - 1), 4: (m - 1, m)}[case]
                split_idx = spl[1] if case in (1, 2) else spl[0]
                bl = dict(std)
                bl[split_idx] = max(bl.get(split_idx, 1), 2)
                try:
                    spec = QSpec(c=C, m=m, s=s, t=t, blowup=bl,
                                 reversal=case, reversal_count=1)
                    grid.append((f"q:m={m},s={s},t={t},rev={case}", gen_Q(spec), spec))
                except (InvalidSpec, NotRich):
                    continue
    return grid


def _w_grid():
    grid = []
    for m in range(16, 21):
        for vi, bl in enumerate(
            [
                {},
                {1: 2, 2: 2, m - 1: 2, m: 2},
                {1: 3, m: 2},
                {2: 2, m - 1: 3},
            ]
        ):
            spec = WSpec(c=C, m=m, blowup=bl)
            grid.append((f"w:m={m},v={vi}", gen_W(spec), spec))
    return grid


@pytest.fixture(scope="module")
def h_grid():
    return _h_grid()


@pytest.fixture(scope="module")
def q_grid():
    return _q_grid()


@pytest.fixture(scope="module")
def w_grid():
    return _w_grid()


@pytest.fixture(scope="module")
def fuzz_corpus():
    return [(seed, random_rich(C, [2] * C, seed)) for seed in range(1000)]


# cycles found by earlier criteria, consumed by the extension-range check
_WITNESSES: list[tuple[str, object, object]] = []


def _note_witness(label, D, w):
    if w is not None:
        _WITNESSES.append((label, D, w))


# ---------------------------------------------------------------------------
# Criteria
# ---------------------------------------------------------------------------


def test_criterion_1_families_have_no_ten_cycle(h_grid, q_grid):
    bad = []
    for label, D, _ in h_grid + q_grid:
        if find_cycle(D, C + 2, mode="oracle") is not None:
            bad.append(label)
    n_h, n_q = len(h_grid), len(q_grid)
    ok = not bad and n_h >= 50 and n_q >= 50
    _line(1, ok, f"oracle 10-cycle absent on {n_h} H + {n_q} Q grid members; "
                 f"violations={bad[:3]}")
    assert ok


def test_criterion_2_families_have_nine_cycle(h_grid, q_grid):
    bad = []
    for label, D, _ in h_grid + q_grid:
        w = find_cycle(D, C + 1, mode="oracle")
        _note_witness(label, D, w)
        if w is None:
            bad.append(label)
    ok = not bad
    _line(2, ok, f"9-cycle present on all {len(h_grid) + len(q_grid)} grid members; "
                 f"violations={bad[:3]}")
    assert ok


def test_criterion_3_recognizer_round_trip(h_grid, q_grid):
    bad = []
    for k, (label, D, spec) in enumerate(h_grid + q_grid):
        R = relabel(D, seed=k)
        res = recognize(R)
        want = MEMBER_OF_H if label.startswith("h") else MEMBER_OF_Q
        if res.verdict != want:
            bad.append((label, res.verdict))
            continue
        # regeneration equality, re-checked externally arc-for-arc
        T = gen_H(res.spec) if want == MEMBER_OF_H else gen_Q(res.spec)
        corr = res.correspondence
        for u in range(T.n):
            if mask_of(corr[v] for v in bits(T.out_mask[u])) != R.out_mask[corr[u]]:
                bad.append((label, "certificate"))
                break
    ok = not bad
    _line(3, ok, f"relabelled round-trip with regeneration equality on "
                 f"{len(h_grid) + len(q_grid)} members; violations={bad[:3]}")
    assert ok


def test_criterion_4_fuzz_equivalence(fuzz_corpus):
    mismatches, members = [], 0
    for seed, D in fuzz_corpus:
        absent = find_cycle(D, C + 2, mode="oracle") is None
        member = recognize(D).is_member
        members += member
        if absent != member:
            mismatches.append(seed)
    ok = not mismatches and len(fuzz_corpus) >= 1000
    _line(4, ok, f"member ⇔ no-10-cycle on {len(fuzz_corpus)} fuzz seeds "
                 f"(members: {members}); mismatches={mismatches[:5]}")
    assert ok


def test_criterion_5_perturbation_equivalence(h_grid, q_grid, w_grid):
    pool = h_grid + q_grid + w_grid
    mismatches = []
    for seed in range(200):
        label, D, _ = pool[seed % len(pool)]
        P = perturb(D, seed)
        absent = find_cycle(P, C + 2, mode="oracle") is None
        member = recognize(P).is_member
        if absent != member:
            mismatches.append((label, seed))
    ok = not mismatches
    _line(5, ok, f"member ⇔ no-10-cycle on 200 rich-preserving perturbations; "
                 f"mismatches={mismatches[:3]}")
    assert ok


def test_criterion_6_w_suite(w_grid, fuzz_corpus):
    bad = []
    for k, (label, D, spec) in enumerate(w_grid):
        if find_cycle(D, C + 1, mode="oracle") is not None:
            bad.append((label, "has 9-cycle"))
        w10 = find_cycle(D, C + 2, mode="oracle")
        _note_witness(label, D, w10)
        if w10 is None:
            bad.append((label, "no 10-cycle"))
        res = recognize_W(relabel(D, seed=5000 + k))
        if res.verdict != MEMBER_OF_W or res.spec != spec:
            bad.append((label, res.verdict))
    for seed, D in fuzz_corpus:
        absent9 = find_cycle(D, C + 1, mode="oracle") is None
        if absent9 != recognize_W(D).is_member:
            bad.append(("fuzz", seed))
    ok = not bad and len(w_grid) >= 20
    _line(6, ok, f"{len(w_grid)} W members (no 9-cycle, 10-cycle, round-trip) and "
                 f"fuzz W-equivalence; violations={bad[:3]}")
    assert ok


def test_criterion_7_bondy(h_grid, q_grid, w_grid, fuzz_corpus):
    bad = []
    touched = [(l, D) for l, D, _ in h_grid + q_grid + w_grid]
    touched += [(f"fuzz:{s}", D) for s, D in fuzz_corpus]
    for label, D in touched:
        for q in range(3, C + 1):
            w = find_cycle(D, q)
            _note_witness(label, D, w)
            if w is None:
                bad.append((label, q))
    ok = not bad
    _line(7, ok, f"cycles of all lengths 3..8 on {len(touched)} strong instances; "
                 f"violations={bad[:3]}")
    assert ok


def test_criterion_8_extension_range():
    assert _WITNESSES, "earlier criteria must have collected witnesses"
    bad, checked = [], 0
    for label, D, w in _WITNESSES:
        if w.parts_met(D) >= D.c:
            continue
        rep = check_extension_range(D, w)
        checked += 1
        if not rep.ok:
            bad.append((label, rep.k, rep.violations))
    ok = not bad and checked > 0
    _line(8, ok, f"extension range satisfied for {checked} witness cycles meeting "
                 f"l < c parts; violations={bad[:3]}")
    assert ok


def test_criterion_9_no_insertion(h_grid, q_grid, w_grid):
    bad, pairs = [], 0
    jobs = [(l, D, C + 1) for l, D, _ in h_grid + q_grid]  # 9 exists, 10 absent
    jobs += [(l, D, C) for l, D, _ in w_grid]  # 8 exists, 9 absent
    for label, D, k in jobs:
        cycles, _ = all_cycles_of_length(D, k, cap=10**4)
        for cyc in cycles:
            on = mask_of(cyc.vertices)
            for x in range(D.n):
                if not on >> x & 1:
                    pairs += 1
                    if can_insert(D, cyc, x):
                        bad.append((label, cyc.vertices, x))
    ok = not bad
    _line(9, ok, f"no insertion point over {pairs} (cycle, vertex) pairs on "
                 f"{len(jobs)} instances; violations={bad[:3]}")
    assert ok


def test_criterion_10_engine_consistency():
    mismatches, n_checked = [], 0
    for seed in range(500):
        D = random_instance(seed, max_n=14, c_range=(3, 6))
        for q in range(3, D.n + 1):
            a = find_cycle(D, q, mode="fast")
            b = find_cycle(D, q, mode="oracle")
            n_checked += 1
            if (a is None) != (b is None):
                mismatches.append((seed, q))
    ok = not mismatches
    _line(10, ok, f"fast vs oracle agree on {n_checked} (instance, q) queries "
                  f"over 500 instances; mismatches={mismatches[:3]}")
    assert ok


def test_criterion_11_diameter_tripwire(h_grid, q_grid):
    bad = []
    for label, D, _ in q_grid:
        if diam(D) < C + 2:
            bad.append((label, diam(D)))
    for label, D, _ in h_grid:
        if diam(D) > C + 1:
            bad.append((label, diam(D)))
    ok = not bad
    _line(11, ok, f"diam ≥ 10 on {len(q_grid)} Q members and ≤ 9 on "
                  f"{len(h_grid)} H members; violations={bad[:3]}")
    assert ok
