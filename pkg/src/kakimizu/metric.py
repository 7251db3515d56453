"""Edge-path metric on the 1-skeleton: BFS distances, diameter, and the
inductive path that bounds every distance by ``n - 1``."""
from __future__ import annotations

import random
import time
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from . import _kernels
from .complex import SimplicialComplex
from .errors import Disconnected, StepNotAnEdge, UnknownVertex
from .knot import bounds
from .orientation import Orientation


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def to_json(self) -> dict:
        return {"distance": self.length, "path": list(self.vertices)}


@dataclass(frozen=True, eq=False)
class AdjacencyGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(s)) for s in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, a: str, b: str) -> bool:
        i, j = self.lookup(a), self.lookup(b)
        return (min(i, j), max(i, j)) in self.edge_set

    def lookup(self, label) -> int:
        key = str(label).replace("\u2212", "-")
        try:
            return self.index[key]
        except KeyError:
            raise UnknownVertex(key) from None

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        indptr = np.zeros(len(self.vertices) + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(s) for s in self.neighbours])
        indices = np.fromiter(
            (w for s in self.neighbours for w in s), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        indptr, indices = self.csr()
        d = _kernels.all_pairs_distances(indptr, indices)
        d.setflags(write=False)
        return d

    def validate_path(self, path: PathWitness) -> bool:
        if not path.vertices:
            return False
        try:
            idx = [self.lookup(v) for v in path.vertices]
        except UnknownVertex:
            return False
        return all((min(a, b), max(a, b)) in self.edge_set for a, b in zip(idx, idx[1:]))


def one_skeleton_graph(K: SimplicialComplex) -> AdjacencyGraph:
    return AdjacencyGraph(K.vertices, K.edges)


def distance(gr: AdjacencyGraph, a, b) -> tuple[int, PathWitness]:
    """Shortest path by BFS; neighbours are scanned in sorted label order and
    each vertex keeps its first discoverer as parent."""
    src, dst = gr.lookup(a), gr.lookup(b)
    parent = {src: None}
    queue = deque([src])
    while queue and dst not in parent:
        u = queue.popleft()
        for w in gr.neighbours[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if dst not in parent:
        raise Disconnected(f"no path from {gr.vertices[src]!r} to {gr.vertices[dst]!r}")
    seq = [dst]
    while parent[seq[-1]] is not None:
        seq.append(parent[seq[-1]])
    witness = PathWitness(tuple(gr.vertices[i] for i in reversed(seq)))
    return witness.length, witness


def diameter(gr: AdjacencyGraph) -> tuple[int, tuple[str, str]]:
    """Largest distance and the first pair (in label order) attaining it."""
    d = gr.distance_matrix
    if len(gr.vertices) == 0:
        raise Disconnected("empty graph")
    if (d < 0).any():
        i, j = map(int, np.argwhere(d < 0)[0])
        raise Disconnected(f"{gr.vertices[i]!r} and {gr.vertices[j]!r} are not connected")
    flat = int(np.argmax(d))
    i, j = divmod(flat, d.shape[1])
    return int(d[i, j]), (gr.vertices[i], gr.vertices[j])


def _inductive_path(a: tuple[str, ...], b: tuple[str, ...]) -> list[tuple[str, ...]]:
    if not a:
        return [()]
    if a[-1] == b[-1]:
        # same last sign: solve on the tree without its last edge, then lift
        return [p + (a[-1],) for p in _inductive_path(a[:-1], b[:-1])]
    middle = b[:-1] + (a[-1],)
    return _inductive_path(a, middle) + [b]


def lemma71_path(a, b, oracle: AdjacencyGraph) -> PathWitness:
    """Path of length at most ``n - 1`` built by induction on the last edge.

    Every hop is checked against ``oracle``; ``StepNotAnEdge`` reports the
    first hop that is not an edge.
    """
    ra, rb = Orientation.from_string(str(a)), Orientation.from_string(str(b))
    if ra.n != rb.n:
        raise ValueError("orientations belong to trees of different sizes")
    oracle.lookup(str(ra))
    oracle.lookup(str(rb))
    seq = ["".join(p) for p in _inductive_path(tuple(str(ra)), tuple(str(rb)))]
    for k, (u, v) in enumerate(zip(seq, seq[1:]), start=1):
        if not oracle.has_edge(u, v):
            raise StepNotAnEdge(k, u, v)
    return PathWitness(tuple(seq))


@dataclass
class CheckResult:
    name: str
    paper_claim: str
    expected: object
    actual: object
    passed: bool
    seconds: float = 0.0
    skipped: bool = False

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "paper_claim": self.paper_claim,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
            "skipped": self.skipped,
            "seconds": round(self.seconds, 6),
        }


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def weight_lipschitz_violations(gr: AdjacencyGraph) -> list[tuple[str, str]]:
    bad = []
    for i, j in gr.edges:
        wa = gr.vertices[i].count("+")
        wb = gr.vertices[j].count("+")
        if abs(wa - wb) > 1:
            bad.append((gr.vertices[i], gr.vertices[j]))
    return bad


def verify_metric_claims(
    n: int,
    K: Optional[SimplicialComplex] = None,
    samples: int = 200,
    seed: int = 0,
    exhaustive_lemma71: bool = False,
) -> list[CheckResult]:
    """Distance claims for the complex on ``n`` tree vertices.

    Failures are reported in the returned checks, never raised.
    """
    from .complex import build_ms_complex

    results: list[CheckResult] = []
    K = K if K is not None else build_ms_complex(n)
    gr = one_skeleton_graph(K)
    lo, hi = str(Orientation.all_minus(n)), str(Orientation.all_plus(n))

    with _Timer() as t:
        try:
            diam, _ = diameter(gr)
        except Disconnected:
            diam = None
    results.append(
        CheckResult("diameter", "diameter equals n - 1 (2g - 1 for n = 2g)", n - 1, diam,
                    diam == n - 1, t.seconds)
    )

    if n % 2 == 0:
        b = bounds(n // 2)
        ok = diam is not None and diam <= b.diameter_bound
        results.append(
            CheckResult("diameter_bound", "diameter at most 2g(3g-2)+1",
                        f"<= {b.diameter_bound}", diam, ok)
        )
        if b.genus1_refined_diameter is not None:
            results.append(
                CheckResult("genus1_diameter_bound", "genus 1: diameter at most 2",
                            f"<= {b.genus1_refined_diameter}", diam,
                            diam is not None and diam <= b.genus1_refined_diameter)
            )

    with _Timer() as t:
        bad = weight_lipschitz_violations(gr)
    results.append(
        CheckResult("weight_lipschitz", "|w(a) - w(b)| <= 1 on every edge", 0, len(bad),
                    not bad, t.seconds)
    )

    with _Timer() as t:
        d_ext = int(gr.distance_matrix[gr.lookup(lo), gr.lookup(hi)])
    results.append(
        CheckResult("extremal_distance", "d(all minus, all plus) = n - 1", n - 1, d_ext,
                    d_ext == n - 1, t.seconds)
    )

    with _Timer() as t:
        actual, ok = _lemma71_checks(gr, n, lo, hi, samples, seed, exhaustive_lemma71)
    results.append(
        CheckResult("inductive_path", "inductive path valid, length <= n - 1, "
                    "and equal to BFS distance on the extremal pair",
                    "all valid", actual, ok, t.seconds)
    )
    return results


def _lemma71_checks(gr, n, lo, hi, samples, seed, exhaustive):
    try:
        ext = lemma71_path(lo, hi, gr)
    except StepNotAnEdge as exc:
        return f"StepNotAnEdge on extremal pair: {exc}", False
    d_ext = int(gr.distance_matrix[gr.lookup(lo), gr.lookup(hi)])
    if ext.length != d_ext:
        return f"extremal length {ext.length} != BFS {d_ext}", False
    labels = gr.vertices
    if exhaustive:
        pairs = [(a, b) for a in labels for b in labels]
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(labels), rng.choice(labels)) for _ in range(samples)]
    longest = 0
    for a, b in pairs:
        try:
            p = lemma71_path(a, b, gr)
        except StepNotAnEdge as exc:
            return f"StepNotAnEdge: {exc}", False
        d = int(gr.distance_matrix[gr.lookup(a), gr.lookup(b)])
        if p.length > n - 1 or p.length < d or not gr.validate_path(p):
            return f"bad path for {a!r} -> {b!r}", False
        longest = max(longest, p.length)
    return {"pairs": len(pairs), "longest": longest, "extremal_length": ext.length}, True
