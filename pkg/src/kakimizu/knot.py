"""Twist data of the 2-bridge knot family and its closed-form bounds.

A knot of genus ``g`` in the family is given by ``2g`` twist coefficients
``a_1 .. a_2g`` with ``|a_j| >= 2``.  Its slope is the nested fraction

    1 / (2a_1 - 1 / (2a_2 + 1 / (2a_3 - ... 1 / (2a_2g))))

where the operator following ``2a_j`` is ``-`` for odd ``j`` and ``+`` for
even ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional

from .errors import (
    CoefficientTooSmall,
    EmptySequence,
    NonpositiveGenus,
    OddLength,
    SlopeDivisionByZero,
)


@dataclass(frozen=True)
class TwistSequence:
    coefficients: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.coefficients)

    def __str__(self):
        return ",".join(str(a) for a in self.coefficients)


@dataclass(frozen=True)
class RationalSlope:
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if gcd(abs(self.numerator), self.denominator) != 1:
            raise ValueError("slope must be fully reduced")

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator,
            "denominator": self.denominator,
            "slope": str(self),
        }


@dataclass(frozen=True)
class BoundSet:
    genus: int
    diameter_bound: int
    intersection_bound: int
    genus1_refined_diameter: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "diameter_bound": self.diameter_bound,
            "intersection_bound": self.intersection_bound,
            "genus1_refined_diameter": self.genus1_refined_diameter,
        }


def validate_twist_sequence(raw: Iterable[int]) -> TwistSequence:
    coeffs = tuple(raw)
    if not coeffs:
        raise EmptySequence()
    for index, a in enumerate(coeffs, start=1):
        if isinstance(a, bool) or not isinstance(a, int):
            raise TypeError(f"twist coefficient a_{index} must be an integer, got {a!r}")
        if abs(a) < 2:
            raise CoefficientTooSmall(index, a)
    return TwistSequence(coeffs)


def parse_twists(text: str) -> TwistSequence:
    """Parse a comma separated list such as ``"2,-3,2,2"``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"bad twist list {text!r}: {exc}") from None
    return validate_twist_sequence(values)


def genus(seq: TwistSequence) -> int:
    if seq.m % 2:
        raise OddLength(seq.m)
    return seq.m // 2


def slope(seq: TwistSequence) -> RationalSlope:
    """Exact slope of the knot, evaluated from the innermost term outwards.

    Python integers are unbounded, so the exponential growth of the
    denominators never overflows.
    """
    genus(seq)
    a = seq.coefficients
    # running value p/q of the tail starting at 2a_j
    p, q = 2 * a[-1], 1
    for j in range(len(a) - 1, 0, -1):  # j is 1-based index of the outer term
        if p == 0:
            raise SlopeDivisionByZero(f"tail starting at a_{j + 1} vanishes")
        sign = -1 if j % 2 else 1
        # 2a_j + sign / (p/q)  ==  (2a_j * p + sign * q) / p
        p, q = 2 * a[j - 1] * p + sign * q, p
    if p == 0:
        raise SlopeDivisionByZero("outermost denominator vanishes")
    num, den = q, p
    if den < 0:
        num, den = -num, -den
    d = gcd(abs(num), den)
    return RationalSlope(num // d, den // d)


def bounds(g: int) -> BoundSet:
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise NonpositiveGenus(g)
    eta = 3 * g - 2
    return BoundSet(
        genus=g,
        diameter_bound=2 * g * eta + 1,
        intersection_bound=2 * eta * eta,
        genus1_refined_diameter=2 if g == 1 else None,
    )
