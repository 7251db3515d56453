"""Finite simplicial complexes stored by their facets, and the complex MS(K).

Only facets are stored; lower faces are enumerated on demand.  Vertices are
kept in sorted label order and facets as sorted index tuples in sorted
order, so two equal complexes have identical fields.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .cycles import CYCLE_CAP, cycle_table
from .errors import BudgetExceeded, InvariantViolation
from .orientation import all_orientations, lex_rank_table

Face = tuple[int, ...]


@dataclass(frozen=True)
class FVector:
    counts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.counts) - 1

    def __iter__(self):
        return iter(self.counts)

    def __getitem__(self, i):
        return self.counts[i]


@dataclass(frozen=True)
class FlagResult:
    is_flag: bool
    witness: Optional[Face] = None
    witness_labels: Optional[tuple[str, ...]] = None

    def __bool__(self):
        return self.is_flag


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    vertices: tuple[str, ...]
    facets: tuple[Face, ...]
    n: Optional[int] = None
    twist_sequence: Optional[tuple[int, ...]] = None
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            self.check_invariants()

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.vertices, self.facets, self.n) == (other.vertices, other.facets, other.n)

    def __hash__(self):
        return hash((self.vertices, self.facets, self.n))

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Iterable[str]],
        vertices: Optional[Iterable[str]] = None,
        n: Optional[int] = None,
        twist_sequence: Optional[Sequence[int]] = None,
    ) -> "SimplicialComplex":
        """Build a complex from facets given by vertex labels.

        Non-maximal sets are dropped; extra ``vertices`` not covered by any
        facet become 0-dimensional facets.
        """
        label_sets = {frozenset(f) for f in facets}
        label_sets.discard(frozenset())
        labels = set().union(*label_sets) if label_sets else set()
        if vertices is not None:
            labels |= set(vertices)
        ordered = tuple(sorted(labels))
        index = {v: i for i, v in enumerate(ordered)}
        as_idx = {tuple(sorted(index[v] for v in f)) for f in label_sets}
        as_idx |= {(index[v],) for v in ordered}
        maximal = _drop_contained(as_idx)
        return cls(
            ordered,
            tuple(sorted(maximal)),
            n=n,
            twist_sequence=tuple(twist_sequence) if twist_sequence is not None else None,
        )

    def check_invariants(self) -> None:
        nv = len(self.vertices)
        if len(set(self.vertices)) != nv:
            raise InvariantViolation("duplicate vertex labels")
        if list(self.vertices) != sorted(self.vertices):
            raise InvariantViolation("vertex labels are not sorted")
        covered = set()
        for f in self.facets:
            if not f:
                raise InvariantViolation("empty facet")
            if any(not 0 <= i < nv for i in f):
                raise InvariantViolation(f"facet {list(f)} has an index out of range")
            if any(a >= b for a, b in zip(f, f[1:])):
                raise InvariantViolation(f"facet {list(f)} is not strictly increasing")
            covered.update(f)
        if list(self.facets) != sorted(self.facets) or len(set(self.facets)) != len(self.facets):
            raise InvariantViolation("facets are not sorted and distinct")
        if len(covered) != nv:
            raise InvariantViolation("some vertex lies in no facet")
        if _has_containment(self.facets):
            raise InvariantViolation("a facet is contained in another facet")

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def index_of(self, label: str) -> int:
        return self._index[label]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def labels(self, face: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in face)

    def iter_faces(self, dim: int) -> Iterator[Face]:
        """Distinct faces of dimension ``dim`` in sorted order."""
        yield from sorted(self._faces_of_size(dim + 1))

    def _faces_of_size(self, size: int) -> set[Face]:
        if size < 1:
            return set()
        out = set()
        for f in self.facets:
            if len(f) == size:
                out.add(f)
            elif len(f) > size:
                out.update(combinations(f, size))
        return out

    def all_faces(self, limit: Optional[int] = None) -> list[set[Face]]:
        """Faces grouped by dimension; ``BudgetExceeded`` past ``limit`` faces."""
        groups, total = [], 0
        for size in range(1, self.dimension + 2):
            g = self._faces_of_size(size)
            total += len(g)
            if limit is not None and total > limit:
                raise BudgetExceeded(f"more than {limit} faces")
            groups.append(g)
        return groups

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset().union(*self.all_faces())

    def is_face(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.face_set

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._faces_of_size(2)))

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(tuple(sorted(s)) for s in adj)


def _drop_contained(faces: set[Face]) -> set[Face]:
    keep = set()
    for f in sorted(faces, key=len, reverse=True):
        fs = set(f)
        if not any(len(g) > len(f) and fs.issubset(g) for g in keep):
            keep.add(f)
    return keep


def _has_containment(facets: Sequence[Face]) -> bool:
    by_size: dict[int, set[Face]] = {}
    for f in facets:
        by_size.setdefault(len(f), set()).add(f)
    sizes = sorted(by_size)
    if len(sizes) == 1:
        return False
    bigger_subsets: set[Face] = set()
    for size in reversed(sizes):
        if by_size[size] & bigger_subsets:
            return True
        for f in by_size[size]:
            for s in sizes:
                if s < size:
                    bigger_subsets.update(combinations(f, s))
    return False


def build_ms_complex(
    n: int,
    cap: int = CYCLE_CAP,
    twist_sequence: Optional[Sequence[int]] = None,
    backend: Optional[str] = None,
) -> SimplicialComplex:
    """MS(K) for the linear tree on ``n`` vertices.

    Vertices are all orientations; facets are the vertex sets of cycles.
    """
    paths, _ = cycle_table(n, cap, backend=backend)
    vertices = tuple(str(r) for r in all_orientations(n, cap=max(cap, n)))
    rank = np.array(lex_rank_table(n), dtype=np.int64)
    idx = np.sort(rank[paths], axis=1)
    idx = np.unique(idx, axis=0)  # rows come back lexicographically sorted
    facets = tuple(tuple(row) for row in idx.tolist())
    if len({i for f in facets for i in f}) != len(vertices):
        raise InvariantViolation("some orientation lies in no cycle")
    return SimplicialComplex(
        vertices,
        facets,
        n=n,
        twist_sequence=tuple(twist_sequence) if twist_sequence is not None else None,
        _checked=True,
    )


def f_vector(K: SimplicialComplex) -> FVector:
    return FVector(tuple(len(g) for g in K.all_faces()))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** d * c for d, c in enumerate(f_vector(K).counts))


def is_flag(K: SimplicialComplex) -> FlagResult:
    """Check that every clique of the 1-skeleton spans a face.

    A smallest non-face clique has all of its codimension-one subsets as
    faces, so it is found by extending each face ``F`` of size ``k - 1`` by
    a common neighbour above ``max(F)`` and testing the new set.
    """
    faces = K.face_set
    nbrs = [set(s) for s in K.neighbours]
    size = 2
    level = sorted(K._faces_of_size(size))
    while level:
        for f in level:
            common = set.intersection(*(nbrs[v] for v in f))
            for v in sorted(w for w in common if w > f[-1]):
                cand = f + (v,)
                if cand in faces:
                    continue
                if all(sub in faces for sub in combinations(cand, size)):
                    return FlagResult(False, cand, K.labels(cand))
        size += 1
        level = sorted(K._faces_of_size(size))
    return FlagResult(True)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = set()
    for f in K.facets:
        if len(f) <= k + 1:
            out.add(f)
        else:
            out.update(combinations(f, k + 1))
    return SimplicialComplex(K.vertices, tuple(sorted(out)), n=K.n, twist_sequence=K.twist_sequence)


def simplex(labels: Sequence[str]) -> SimplicialComplex:
    """The full simplex on the given vertex labels."""
    return SimplicialComplex.from_facets([labels])


def simplex_boundary(labels: Sequence[str]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(combinations(labels, len(labels) - 1))


def cycle_graph_complex(labels: Sequence[str]) -> SimplicialComplex:
    """A polygon: the vertices joined in order by edges, no 2-faces."""
    m = len(labels)
    return SimplicialComplex.from_facets([(labels[i], labels[(i + 1) % m]) for i in range(m)])
