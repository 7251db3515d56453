"""Orientations of the linear tree v_1 - v_2 - ... - v_n.

An orientation is stored as an ``n`` together with a bit vector: bit ``j-1``
is set iff edge ``e_j = {v_j, v_j+1}`` is directed ``v_j -> v_j+1`` (sign
``+``).  The text form is the sign string ``eps_1 .. eps_n-1`` over ``+``
and ``-``; the empty string is the unique orientation for ``n = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotASink, NTooLarge

HARD_CAP = 12

_MINUS_ALIASES = {"-": "-", "−": "-", "+": "+"}


@dataclass(frozen=True)
class LinearTree:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a linear tree needs at least one vertex")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(j, j + 1) for j in range(1, self.n)]


@dataclass(frozen=True)
class Orientation:
    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.bits < (1 << (self.n - 1)):
            raise ValueError(f"bits {self.bits} out of range for n = {self.n}")

    @classmethod
    def from_string(cls, text: str) -> "Orientation":
        bits = 0
        for i, ch in enumerate(text):
            sign = _MINUS_ALIASES.get(ch)
            if sign is None:
                raise ValueError(f"bad orientation character {ch!r} in {text!r}")
            if sign == "+":
                bits |= 1 << i
        return cls(len(text) + 1, bits)

    @classmethod
    def all_minus(cls, n: int) -> "Orientation":
        return cls(n, 0)

    @classmethod
    def all_plus(cls, n: int) -> "Orientation":
        return cls(n, (1 << (n - 1)) - 1)

    @property
    def signs(self) -> str:
        return bits_to_string(self.bits, self.n)

    def __str__(self):
        return self.signs

    def sort_key(self) -> str:
        return self.signs


def bits_to_string(bits: int, n: int) -> str:
    return "".join("+" if bits >> i & 1 else "-" for i in range(n - 1))


def lex_rank_table(n: int) -> list[int]:
    """``rank[bits]`` is the position of the orientation in sorted string order.

    ``'+'`` sorts before ``'-'`` in ASCII, and the first sign is the most
    significant, so the rank is the bit-reversal of the complemented vector.
    """
    width = n - 1
    mask = (1 << width) - 1
    table = []
    for bits in range(1 << width):
        inv = ~bits & mask
        table.append(int(format(inv, f"0{width}b")[::-1], 2) if width else 0)
    return table


def all_orientations(n: int, cap: int = HARD_CAP) -> list[Orientation]:
    """All ``2**(n-1)`` orientations in lexicographic sign-string order."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise NTooLarge(n, cap)
    rank = lex_rank_table(n)
    by_rank = sorted(range(1 << (n - 1)), key=rank.__getitem__)
    return [Orientation(n, b) for b in by_rank]


def sink_test(bits: int, n: int, j: int) -> bool:
    if n == 1:
        return j == 1
    into_from_left = j == 1 or bits >> (j - 2) & 1 == 1
    into_from_right = j == n or bits >> (j - 1) & 1 == 0
    return into_from_left and into_from_right


def flip_at(bits: int, n: int, j: int) -> int:
    if j > 1:
        bits ^= 1 << (j - 2)
    if j < n:
        bits ^= 1 << (j - 1)
    return bits


def sinks(rho: Orientation) -> set[int]:
    return {j for j in range(1, rho.n + 1) if sink_test(rho.bits, rho.n, j)}


def apply_sink_reversal(rho: Orientation, j: int) -> Orientation:
    if not 1 <= j <= rho.n or not sink_test(rho.bits, rho.n, j):
        raise NotASink(j)
    return Orientation(rho.n, flip_at(rho.bits, rho.n, j))


def weight(rho: Orientation) -> int:
    return bin(rho.bits).count("1")
