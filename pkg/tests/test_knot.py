from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kakimizu.errors import (
    CoefficientTooSmall,
    EmptySequence,
    NonpositiveGenus,
    OddLength,
)
from kakimizu.knot import (
    RationalSlope,
    bounds,
    genus,
    parse_twists,
    slope,
    validate_twist_sequence,
)
from oracles import slope_by_moebius


def test_validate_accepts_and_rejects():
    assert validate_twist_sequence([2, 2]).m == 2
    assert validate_twist_sequence([-2, 3]).coefficients == (-2, 3)
    with pytest.raises(CoefficientTooSmall) as info:
        validate_twist_sequence([2, 1, 2, 2])
    assert info.value.index == 2
    with pytest.raises(CoefficientTooSmall):
        validate_twist_sequence([0, 2])
    with pytest.raises(CoefficientTooSmall):
        validate_twist_sequence([2, -1])
    with pytest.raises(EmptySequence):
        validate_twist_sequence([])


def test_parse_twists():
    assert parse_twists("2, -3,2,2").coefficients == (2, -3, 2, 2)
    with pytest.raises(ValueError):
        parse_twists("2,x")


@pytest.mark.parametrize("raw,g", [([2, 2], 1), ([2, 2, 2, 2], 2), ([3, -2, 5, 2, 2, 2], 3)])
def test_genus(raw, g):
    assert genus(validate_twist_sequence(raw)) == g


def test_genus_odd_length():
    with pytest.raises(OddLength):
        genus(validate_twist_sequence([2, 2, 2]))
    with pytest.raises(OddLength):
        slope(validate_twist_sequence([2, 2, 2]))


# expected values computed by the Moebius-matrix oracle in tests/oracles.py
@pytest.mark.parametrize(
    "raw,num,den",
    [([2, 2], 4, 15), ([2, 2, 2, 2], 64, 241), ([-2, 2], -4, 17)],
)
def test_slope_examples(raw, num, den):
    s = slope(validate_twist_sequence(raw))
    assert (s.numerator, s.denominator) == (num, den)
    ref = slope_by_moebius(raw)
    assert (ref.numerator, ref.denominator) == (num, den)


coeff = st.integers(2, 9).flatmap(lambda a: st.sampled_from([a, -a]))


@given(st.integers(1, 5).flatmap(lambda g: st.lists(coeff, min_size=2 * g, max_size=2 * g)))
def test_slope_matches_oracle_and_is_reduced(raw):
    s = slope(validate_twist_sequence(raw))
    ref = slope_by_moebius(raw)
    assert (s.numerator, s.denominator) == (ref.numerator, ref.denominator)
    assert s.denominator > 0
    assert gcd(abs(s.numerator), s.denominator) == 1


def test_slope_large_sequence_exact():
    raw = [9, -9] * 30
    s = slope(validate_twist_sequence(raw))
    assert s.denominator > 2**64
    ref = slope_by_moebius(raw)
    assert (s.numerator, s.denominator) == (ref.numerator, ref.denominator)


def test_rational_slope_invariants():
    with pytest.raises(ValueError):
        RationalSlope(2, 4)
    with pytest.raises(ValueError):
        RationalSlope(1, -3)


def test_bounds_examples():
    b1 = bounds(1)
    assert (b1.diameter_bound, b1.intersection_bound, b1.genus1_refined_diameter) == (3, 2, 2)
    b2 = bounds(2)
    assert (b2.diameter_bound, b2.intersection_bound, b2.genus1_refined_diameter) == (17, 32, None)
    for bad in (0, -1):
        with pytest.raises(NonpositiveGenus):
            bounds(bad)


@given(st.integers(1, 200))
def test_bounds_monotone_and_above_exact_diameter(g):
    a, b = bounds(g), bounds(g + 1)
    assert a.diameter_bound < b.diameter_bound
    assert a.intersection_bound < b.intersection_bound
    assert 2 * g - 1 <= a.diameter_bound
    assert a.diameter_bound == 2 * g * (3 * g - 2) + 1
    assert a.intersection_bound == 2 * (3 * g - 2) ** 2
