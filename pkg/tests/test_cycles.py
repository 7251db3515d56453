import pytest

from kakimizu.cycles import (
    Cycle,
    enumerate_cycles,
    maximal_simplices,
    validate_cycle,
)
from kakimizu.errors import NTooLarge
from kakimizu.orientation import weight
from oracles import brute_force_cycles


def test_validate_examples():
    assert validate_cycle(Cycle.from_strings(["+", "-"], [2, 1])) is None
    assert validate_cycle(Cycle.from_strings(["++", "+-", "-+"], [3, 2, 1])) is None
    bad = validate_cycle(Cycle.from_strings(["+", "-"], [1, 2]))
    assert (bad.clause, bad.k) == ("NotASink", 1)


@pytest.mark.parametrize(
    "orients,order,clause",
    [
        (["+", "-"], [2, 2], "NotAPermutation"),
        (["+", "+"], [2, 1], "NotDistinct"),
        (["++", "+-", "--"], [3, 2, 1], "WrongSuccessor"),
        (["++", "+-"], [3, 2, 1], "Length"),
        (["+", "-"], [2, 1, 3], "Length"),
        (["++", "-"], [2, 1], "Length"),
    ],
)
def test_validate_reports_clause(orients, order, clause):
    v = validate_cycle(Cycle.from_strings(orients, order))
    assert v is not None and v.clause == clause


def test_enumerate_small():
    (c1,) = enumerate_cycles(1)
    assert c1.to_json() == {"orientations": [""], "vertex_order": [1]}
    (c2,) = enumerate_cycles(2)
    assert {str(r) for r in c2.orientations} == {"+", "-"}
    sets = {frozenset(str(r) for r in c.orientations) for c in enumerate_cycles(3)}
    assert sets == {frozenset({"--", "+-", "-+"}), frozenset({"++", "+-", "-+"})}


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    got = {
        (tuple(str(r) for r in c.orientations), c.vertex_order) for c in enumerate_cycles(n)
    }
    assert got == brute_force_cycles(n)


def test_enumeration_is_deterministic_and_sorted():
    cycles = enumerate_cycles(5)
    keys = [tuple(str(r) for r in c.orientations) for c in cycles]
    assert keys == sorted(keys)
    assert cycles == enumerate_cycles(5)


def test_cap():
    with pytest.raises(NTooLarge):
        enumerate_cycles(11)
    with pytest.raises(NTooLarge):
        maximal_simplices(11)


@pytest.mark.parametrize("n", range(1, 9))
def test_cycle_invariants(n):
    cycles = enumerate_cycles(n)
    for c in cycles:
        assert validate_cycle(c) is None
        assert c.canonical() == c
        for k in range(n):
            assert c.rotated(k).canonical() == c
        weights = {weight(r) for r in c.orientations}
        if n >= 2:
            lo = min(weights)
            assert weights == {lo, lo + 1}


def test_maximal_simplices_examples():
    (s2,) = maximal_simplices(2)
    assert s2.labels() == ["+", "-"]
    assert sorted(s.labels() for s in maximal_simplices(3)) == [
        ["++", "+-", "-+"],
        ["+-", "-+", "--"],
    ]
    facets4 = maximal_simplices(4)
    assert len(facets4) == 6  # F_4 from the brute-force oracle
    assert all(len(s.vertices) == 4 for s in facets4)
    assert len(set().union(*(s.vertices for s in facets4))) == 8


@pytest.mark.parametrize("n", range(1, 9))
def test_maximal_simplices_pure(n):
    assert all(len(s.vertices) == n for s in maximal_simplices(n))
