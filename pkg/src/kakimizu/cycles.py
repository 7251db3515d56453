"""Sink-reversal cycles of the linear tree and the maximal simplices they span.

A cycle on ``n`` tree vertices visits ``n`` distinct orientations, firing
each tree vertex exactly once, and returns to its start.  Cycles are
identified up to rotation; the canonical representative starts at its
lexicographically smallest orientation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import _kernels
from .errors import NTooLarge
from .orientation import (
    Orientation,
    bits_to_string,
    flip_at,
    lex_rank_table,
    sink_test,
)

CYCLE_CAP = 10


@dataclass(frozen=True)
class Cycle:
    orientations: tuple[Orientation, ...]
    vertex_order: tuple[int, ...]

    @classmethod
    def from_strings(cls, orientations, vertex_order) -> "Cycle":
        return cls(
            tuple(Orientation.from_string(s) for s in orientations),
            tuple(int(j) for j in vertex_order),
        )

    @property
    def n(self) -> int:
        return len(self.vertex_order)

    def to_json(self) -> dict:
        return {
            "orientations": [str(r) for r in self.orientations],
            "vertex_order": list(self.vertex_order),
        }

    def rotated(self, k: int) -> "Cycle":
        k %= max(1, len(self.orientations))
        return Cycle(
            self.orientations[k:] + self.orientations[:k],
            self.vertex_order[k:] + self.vertex_order[:k],
        )

    def canonical(self) -> "Cycle":
        labels = [str(r) for r in self.orientations]
        return self.rotated(labels.index(min(labels)))


@dataclass(frozen=True)
class CycleViolation:
    clause: str
    k: Optional[int]
    detail: str

    def to_json(self) -> dict:
        return {"clause": self.clause, "k": self.k, "detail": self.detail}


@dataclass(frozen=True)
class MaximalSimplex:
    vertices: frozenset[Orientation]

    def labels(self) -> list[str]:
        return sorted(str(r) for r in self.vertices)


def validate_cycle(c: Cycle) -> Optional[CycleViolation]:
    """Return ``None`` for a valid cycle, otherwise the first violated clause.

    Clauses are checked in the order: shape, permutation, distinctness,
    then each move ``k = 1..n`` (sink precondition, then successor).
    """
    rhos, order = c.orientations, c.vertex_order
    n = len(order)
    if n == 0 or len(rhos) != n:
        return CycleViolation(
            "Length", None, f"{len(rhos)} orientations for {n} moves"
        )
    bad = [r for r in rhos if r.n != n]
    if bad:
        return CycleViolation(
            "Length", None, f"orientation {str(bad[0])!r} is not on a tree with {n} vertices"
        )
    if sorted(order) != list(range(1, n + 1)):
        return CycleViolation("NotAPermutation", None, f"{list(order)} is not a permutation of 1..{n}")
    if len(set(rhos)) != n:
        return CycleViolation("NotDistinct", None, "orientations repeat")
    for k in range(n):
        rho, j = rhos[k], order[k]
        if not sink_test(rho.bits, n, j):
            return CycleViolation("NotASink", k + 1, f"v_{j} is not a sink of {str(rho)!r}")
        image = flip_at(rho.bits, n, j)
        nxt = rhos[(k + 1) % n]
        if image != nxt.bits:
            return CycleViolation(
                "WrongSuccessor",
                k + 1,
                f"v_{j}({str(rho)!r}) = {bits_to_string(image, n)!r}, not {str(nxt)!r}",
            )
    return None


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise NTooLarge(n, cap)


@lru_cache(maxsize=16)
def _sorted_tables(n: int, backend: str) -> tuple[np.ndarray, np.ndarray]:
    impl = _kernels.implementations()[backend]
    rank = np.array(lex_rank_table(n), dtype=np.int64)
    paths, orders = _kernels.cycle_arrays(n, rank, impl=impl)
    if len(paths) == 0:
        return paths, orders
    ranked = rank[paths]
    keys = [orders[:, c] for c in range(n - 1, -1, -1)]
    keys += [ranked[:, c] for c in range(n - 1, -1, -1)]
    perm = np.lexsort(keys)
    paths, orders = paths[perm], orders[perm]
    paths.setflags(write=False)
    orders.setflags(write=False)
    return paths, orders


def cycle_table(n: int, cap: int = CYCLE_CAP, backend: Optional[str] = None):
    """Canonical cycles as read-only ``(C, n)`` arrays ``(bits, vertex_order)``.

    Rows are sorted by the orientation label sequence, then vertex order.
    """
    _check_cap(n, cap)
    return _sorted_tables(n, backend or _kernels.BACKEND)


def enumerate_cycles(n: int, cap: int = CYCLE_CAP) -> list[Cycle]:
    paths, orders = cycle_table(n, cap)
    return [
        Cycle(tuple(Orientation(n, int(b)) for b in row), tuple(int(j) for j in jrow))
        for row, jrow in zip(paths.tolist(), orders.tolist())
    ]


def maximal_simplices(n: int, cap: int = CYCLE_CAP) -> list[MaximalSimplex]:
    paths, _ = cycle_table(n, cap)
    seen = {}
    for row in paths.tolist():
        key = frozenset(row)
        if key not in seen:
            seen[key] = MaximalSimplex(frozenset(Orientation(n, b) for b in row))
    return list(seen.values())
