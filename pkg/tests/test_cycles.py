"""Cycle search, spectra, insertion points and the extension-range check."""

import pytest

from helpers import random_instance

from mtour.cycles import (
    CycleWitness,
    all_cycles_of_length,
    can_insert,
    check_extension_range,
    cycle_spectrum,
    find_cycle,
)
from mtour.digraph import build, is_strong
from mtour.errors import BadLength, VertexOnCycle
from mtour.families import random_rich


def triangle():
    return build([[0], [1], [2]], [(0, 1), (1, 2), (2, 0)])


def test_triangle_cycle():
    w = find_cycle(triangle(), 3)
    assert w is not None and w.vertices == (0, 1, 2)
    assert w.validate(triangle())
    assert w.parts_met(triangle()) == 3


def test_bad_length_raises():
    with pytest.raises(BadLength):
        find_cycle(triangle(), 2)
    with pytest.raises(BadLength):
        find_cycle(triangle(), 4)
    with pytest.raises(BadLength):
        cycle_spectrum(triangle(), 4)


def test_bipartite_has_no_odd_cycle():
    D = build([[0, 2], [1, 3]], [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert find_cycle(D, 3) is None
    assert find_cycle(D, 4) is not None
    assert cycle_spectrum(D, 4).lengths() == [4]


def test_witness_is_lexicographically_smallest():
    # seeded instances: the fast witness equals the oracle witness exactly
    for seed in range(30):
        D = random_instance(seed)
        for q in range(3, D.n + 1):
            a = find_cycle(D, q, mode="fast")
            b = find_cycle(D, q, mode="oracle")
            assert (a is None) == (b is None), (seed, q)
            if a is not None:
                assert a.vertices == b.vertices, (seed, q)
                assert a.validate(D)


def test_spectrum_matches_find_cycle():
    D = random_rich(5, [2] * 5, seed=3)
    spec = cycle_spectrum(D, D.n)
    for q in range(3, D.n + 1):
        assert spec.exists(q) == (find_cycle(D, q) is not None)


def test_enumerate_all_cycles():
    D = build([[0, 2], [1, 3]], [(0, 1), (1, 2), (2, 3), (3, 0)])
    cycles, exhausted = all_cycles_of_length(D, 4)
    assert not exhausted
    assert [c.vertices for c in cycles] == [(0, 1, 2, 3)]
    # every enumerated cycle is valid and anchored at its minimum vertex
    R = random_rich(5, [2] * 5, seed=9)
    cycles, exhausted = all_cycles_of_length(R, 5)
    assert not exhausted
    assert len({c.vertices for c in cycles}) == len(cycles)
    for c in cycles:
        assert c.validate(R)
        assert c.vertices[0] == min(c.vertices)


def test_enumeration_cap_sets_exhausted():
    R = random_rich(5, [3] * 5, seed=1)
    allc, full = all_cycles_of_length(R, 6, cap=10**6)
    assert not full
    if len(allc) > 2:
        capped, exhausted = all_cycles_of_length(R, 6, cap=2)
        assert exhausted and len(capped) == 2


def test_can_insert():
    # path 0 -> 1 -> 2 -> 0 with chord vertex 3 insertable between 0 and 1
    D = build([[0], [1], [2], [3]], [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (2, 3)])
    C = CycleWitness((0, 1, 2))
    assert can_insert(D, C, 3) == [0]
    with pytest.raises(VertexOnCycle):
        can_insert(D, C, 1)


def test_extension_range_on_strong_instances():
    # seeded strong instances: a k-cycle meeting l < c parts forces the range
    checked = 0
    for seed in range(40):
        D = random_instance(seed)
        if not is_strong(D):
            continue
        for q in range(3, D.n + 1):
            w = find_cycle(D, q)
            if w is None or w.parts_met(D) >= D.c:
                continue
            rep = check_extension_range(D, w)
            assert rep.ok, (seed, q, rep)
            checked += 1
    assert checked > 10
