"""Contractibility certificates for finite simplicial complexes.

Three independent witnesses are offered: reduced integral homology, a
greedy elementary-collapse sequence, and (for loops) a search over
elementary homotopy moves.  Negative outcomes of the last two are always
inconclusive.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complex import Face, SimplicialComplex
from .errors import BudgetExceeded
from .snf import divisibility_ok, invariant_factors

FACE_BUDGET = 10**6
CIRCUIT_BUDGET = 10**6
LEMMA51_VERTEX_CAP = 64


@dataclass(frozen=True)
class HomologySummary:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def trivial(self) -> bool:
        return not any(self.betti) and not any(self.torsion)

    def to_json(self) -> dict:
        return {"reduced_betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


def boundary_entries(lower: Sequence[Face], upper: Sequence[Face]) -> dict[tuple[int, int], int]:
    """Signed incidence of ``upper`` faces (columns) on ``lower`` faces (rows)."""
    index = {f: i for i, f in enumerate(lower)}
    entries = {}
    for c, f in enumerate(upper):
        for k in range(len(f)):
            entries[(index[f[:k] + f[k + 1:]], c)] = -1 if k % 2 else 1
    return entries


def homology(K: SimplicialComplex, face_budget: int = FACE_BUDGET) -> HomologySummary:
    groups = [sorted(g) for g in K.all_faces(limit=face_budget)]
    dims = [len(g) for g in groups]
    # rank of boundary from C_k to C_{k-1}; the augmentation C_0 -> Z has rank 1
    ranks = [1 if dims and dims[0] else 0]
    torsion_of = [()]
    for k in range(1, len(groups)):
        diag = invariant_factors(boundary_entries(groups[k - 1], groups[k]), dims[k - 1], dims[k])
        if not divisibility_ok(diag):
            raise ArithmeticError("Smith normal form diagonal lost divisibility")
        ranks.append(len(diag))
        torsion_of.append(tuple(d for d in diag if d > 1))
    ranks.append(0)
    torsion_of.append(())
    betti = tuple(dims[k] - ranks[k] - ranks[k + 1] for k in range(len(groups)))
    torsion = tuple(torsion_of[k + 1] for k in range(len(groups)))
    return HomologySummary(betti, torsion)


@dataclass(frozen=True)
class CollapseCertificate:
    pairs: tuple[tuple[Face, Face], ...]
    terminal: tuple[Face, ...]

    @property
    def success(self) -> bool:
        return len(self.terminal) == 1 and len(self.terminal[0]) == 1

    def to_json(self, K: Optional[SimplicialComplex] = None) -> dict:
        show = (lambda f: list(K.labels(f))) if K is not None else list
        return {
            "pairs": [[show(s), show(t)] for s, t in self.pairs],
            "terminal": [show(f) for f in self.terminal],
        }


def _codim1(f: Face):
    return [f[:k] + f[k + 1:] for k in range(len(f))] if len(f) > 1 else []


def greedy_collapse(K: SimplicialComplex, face_budget: int = FACE_BUDGET) -> CollapseCertificate:
    """Collapse free faces greedily, always taking the smallest free face."""
    faces = set().union(*K.all_faces(limit=face_budget))
    cof: dict[Face, set[Face]] = {f: set() for f in faces}
    for f in faces:
        for g in _codim1(f):
            cof[g].add(f)

    def free_coface(s):
        if s in cof and len(cof[s]) == 1:
            (t,) = cof[s]
            if not cof[t]:
                return t
        return None

    heap = [s for s in faces if free_coface(s) is not None]
    heapq.heapify(heap)
    pairs = []
    while heap:
        s = heapq.heappop(heap)
        t = free_coface(s)
        if t is None:
            continue
        pairs.append((s, t))
        touched = set()
        for g in _codim1(t):
            cof[g].discard(t)
            touched.add(g)
        for g in _codim1(s):
            cof[g].discard(s)
            touched.add(g)
        del cof[s], cof[t]
        touched.discard(s)
        for g in list(touched):
            touched.update(_codim1(g))
        for g in touched:
            if free_coface(g) is not None:
                heapq.heappush(heap, g)
    return CollapseCertificate(tuple(pairs), tuple(sorted(cof)))


def collapse_certificate(K: SimplicialComplex, face_budget: int = FACE_BUDGET) -> Optional[CollapseCertificate]:
    """A collapse down to one vertex, or ``None`` (inconclusive) if greedy gets stuck."""
    cert = greedy_collapse(K, face_budget)
    return cert if cert.success else None


def replay_collapse(K: SimplicialComplex, cert: CollapseCertificate) -> bool:
    """Re-run the listed collapses, checking freeness at every step."""
    faces = set().union(*K.all_faces())
    for s, t in cert.pairs:
        if s not in faces or t not in faces or len(t) != len(s) + 1 or not set(s) <= set(t):
            return False
        cofaces = [f for f in faces if len(f) == len(s) + 1 and set(s) <= set(f)]
        if cofaces != [t]:
            return False
        if any(len(f) == len(t) + 1 and set(t) <= set(f) for f in faces):
            return False
        faces.discard(s)
        faces.discard(t)
    return sorted(faces) == list(cert.terminal)


@dataclass(frozen=True)
class EdgeLoop:
    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class ContractibilityVerdict:
    status: str  # "contractible" or "unknown"
    witness: Optional[tuple[tuple[str, ...], ...]] = None
    explored: int = 0
    budget: int = 0
    exhausted: bool = False

    @property
    def contractible(self) -> bool:
        return self.status == "contractible"

    def to_json(self) -> dict:
        out = {"status": self.status, "explored": self.explored, "budget": self.budget}
        if self.witness is not None:
            out["witness"] = [list(w) for w in self.witness]
        else:
            out["search_space_exhausted"] = self.exhausted
        return out


def _canon(loop: tuple[int, ...]) -> tuple[int, ...]:
    """Rotation and reflection class representative."""
    m = len(loop)
    if m <= 1:
        return loop
    rev = loop[::-1]
    return min(min(s[k:] + s[:k] for k in range(m)) for s in (loop, rev))


class _MoveSystem:
    def __init__(self, K: SimplicialComplex):
        self.edges = set(K.edges)
        self.triangles = set(K._faces_of_size(3))
        self.apex: dict[tuple[int, int], list[int]] = {}
        for a, b, c in sorted(self.triangles):
            self.apex.setdefault((a, b), []).append(c)
            self.apex.setdefault((a, c), []).append(b)
            self.apex.setdefault((b, c), []).append(a)

    def is_edge(self, a, b):
        return (min(a, b), max(a, b)) in self.edges

    def spans_triangle(self, a, b, c):
        return tuple(sorted((a, b, c))) in self.triangles

    def moves(self, loop: tuple[int, ...], max_len: int):
        m = len(loop)
        if m < 2:
            return
        for i in range(m):
            x, y, z = loop[i], loop[(i + 1) % m], loop[(i + 2) % m]
            if x == z:  # M1: drop a backtrack x, y, x
                if m == 2:
                    yield "M1", (x,)
                else:
                    drop = {(i + 1) % m, (i + 2) % m}
                    yield "M1", tuple(loop[k] for k in range(m) if k not in drop)
            elif m >= 3 and self.spans_triangle(x, y, z):  # M2: x, y, z -> x, z
                yield "M2", tuple(loop[k] for k in range(m) if k != (i + 1) % m)
        if m < max_len:
            for i in range(m):  # M3: x, z -> x, y, z across a triangle
                x, z = loop[i], loop[(i + 1) % m]
                if m == 2 and i == 1:
                    continue
                for y in self.apex.get((min(x, z), max(x, z)), ()):
                    yield "M3", loop[: i + 1] + (y,) + loop[i + 1:]


def is_circuit_contractible(K: SimplicialComplex, loop, budget: int = CIRCUIT_BUDGET,
                            _moves: Optional[_MoveSystem] = None,
                            _known: Optional[dict] = None) -> ContractibilityVerdict:
    """Search for a sequence of elementary moves taking the loop to a point.

    Moves: drop a backtrack (M1), shortcut two edges across a 2-face (M2),
    and the inverse of M2 (M3).  States are expanded shortest loop first,
    ties in discovery order; loops longer than ``2k + 2`` are not explored
    and at most ``budget`` distinct loops are visited.

    ``_known`` maps loops already shown contractible to their next loop on
    the way to a point; it is read and extended, so repeated calls on one
    complex can share it.
    """
    labels = loop.vertices if isinstance(loop, EdgeLoop) else tuple(loop)
    start = tuple(K.index_of(v) for v in labels)
    ms = _moves or _MoveSystem(K)
    k = len(start)
    for a, b in zip(start, start[1:] + start[:1]):
        if k > 1 and not ms.is_edge(a, b):
            raise ValueError(f"{K.vertices[a]!r} - {K.vertices[b]!r} is not an edge")
    max_len = 2 * k + 2
    root = _canon(start)
    parent = {root: None}
    heap = [(len(root), 0, root)]
    tick = 1
    while heap:
        _, _, cur = heapq.heappop(heap)
        if len(cur) == 1 or (_known is not None and cur in _known):
            chain = [cur]
            while parent[chain[-1]] is not None:
                chain.append(parent[chain[-1]])
            chain.reverse()
            while len(chain[-1]) > 1:
                chain.append(_known[chain[-1]])
            if _known is not None:
                for a, b in zip(chain, chain[1:]):
                    _known.setdefault(a, b)
            witness = tuple(K.labels(s) for s in chain)
            return ContractibilityVerdict("contractible", witness, len(parent), budget)
        for _, nxt in ms.moves(cur, max_len):
            c = _canon(nxt)
            if c not in parent:
                if len(parent) >= budget:
                    return ContractibilityVerdict("unknown", None, len(parent), budget, False)
                parent[c] = cur
                heapq.heappush(heap, (len(c), tick, c))
                tick += 1
    return ContractibilityVerdict("unknown", None, len(parent), budget, True)


def replay_loop_witness(K: SimplicialComplex, verdict: ContractibilityVerdict) -> bool:
    """Check that consecutive witness loops differ by exactly one move."""
    if verdict.witness is None:
        return False
    ms = _MoveSystem(K)
    loops = [tuple(K.index_of(v) for v in w) for w in verdict.witness]
    max_len = 2 * len(loops[0]) + 2
    for a, b in zip(loops, loops[1:]):
        if _canon(b) not in {_canon(x) for _, x in ms.moves(a, max_len)}:
            return False
    return len(loops[-1]) == 1


def simplicial_circuits(K: SimplicialComplex, max_len: int = 5, min_len: int = 3):
    """Closed edge paths with distinct vertices, one per rotation/reflection class.

    Each circuit starts at its smallest vertex and its second vertex is
    smaller than its last.
    """
    nbrs = K.neighbours
    for s in range(len(K.vertices)):
        stack = [(s, (s,))]
        while stack:
            u, path = stack.pop()
            for w in reversed(nbrs[u]):
                if w == s and len(path) >= min_len and path[1] < path[-1]:
                    yield path
                elif w > s and w not in path and len(path) < max_len:
                    stack.append((w, path + (w,)))


@dataclass
class Lemma51Verdict:
    verdict: str
    diameter: Optional[int]
    diameter_ok: bool
    circuits_checked: dict = field(default_factory=dict)
    circuits_ok: Optional[bool] = None
    failing_circuit: Optional[tuple[str, ...]] = None
    failures: list = field(default_factory=list)

    @property
    def simply_connected(self) -> bool:
        return self.verdict == "simply-connected"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "diameter": self.diameter,
            "diameter_at_most_2": self.diameter_ok,
            "circuits_checked": {str(k): v for k, v in sorted(self.circuits_checked.items())},
            "short_circuits_contractible": self.circuits_ok,
            "failing_circuit": list(self.failing_circuit) if self.failing_circuit else None,
            "failed_preconditions": list(self.failures),
        }


def lemma51_verdict(K: SimplicialComplex, budget: int = CIRCUIT_BUDGET,
                    vertex_cap: int = LEMMA51_VERTEX_CAP) -> Lemma51Verdict:
    """Decide the short-circuit simple-connectivity criterion.

    The complex is certified simply connected when its 1-skeleton has
    diameter at most 2 and every circuit of length 3, 4 or 5 is shown
    contractible.  A failing precondition says nothing about the
    fundamental group.
    """
    from .metric import diameter, one_skeleton_graph
    from .errors import Disconnected

    if len(K.vertices) > vertex_cap:
        raise BudgetExceeded(f"{len(K.vertices)} vertices exceeds the cap {vertex_cap}")
    try:
        diam, _ = diameter(one_skeleton_graph(K))
    except Disconnected:
        diam = None
    diameter_ok = diam is not None and diam <= 2
    failures = [] if diameter_ok else ["diameter"]

    ms = _MoveSystem(K)
    known: dict = {}
    counts = {3: 0, 4: 0, 5: 0}
    failing = None
    for circuit in simplicial_circuits(K):
        counts[len(circuit)] += 1
        v = is_circuit_contractible(K, K.labels(circuit), budget, _moves=ms, _known=known)
        if not v.contractible:
            failing = K.labels(circuit)
            failures.append("circuit")
            break
    circuits_ok = failing is None
    verdict = "simply-connected" if diameter_ok and circuits_ok else "criterion fails"
    return Lemma51Verdict(verdict, diam, diameter_ok, counts, circuits_ok, failing, failures)
