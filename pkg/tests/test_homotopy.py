import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kakimizu.complex import (
    SimplicialComplex,
    cycle_graph_complex,
    euler_characteristic,
    simplex,
    simplex_boundary,
    skeleton,
)
from kakimizu.errors import BudgetExceeded
from kakimizu.homotopy import (
    CollapseCertificate,
    ContractibilityVerdict,
    EdgeLoop,
    boundary_entries,
    collapse_certificate,
    greedy_collapse,
    homology,
    is_circuit_contractible,
    lemma51_verdict,
    replay_collapse,
    replay_loop_witness,
    simplicial_circuits,
)
from kakimizu.snf import divisibility_ok, invariant_factors, smith_diagonal
from oracles import rational_rank

sympy = pytest.importorskip("sympy")


def _sympy_diag(rows):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    d = smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[6, 0], [0, 4]],
        [[0, 0], [0, 0]],
        [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
        [[12]],
    ],
)
def test_smith_diagonal_against_sympy(rows):
    diag = smith_diagonal(rows)
    assert divisibility_ok(diag)
    assert sorted(diag) == _sympy_diag(rows)
    sparse = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
    assert invariant_factors(sparse, len(rows), len(rows[0])) == diag


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_invariant_factors_property(rows):
    sparse = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
    diag = invariant_factors(sparse, len(rows), len(rows[0]))
    assert divisibility_ok(diag)
    assert len(diag) == rational_rank(rows)
    assert sorted(diag) == _sympy_diag(rows)


def test_homology_examples(ms, hollow_square):
    assert homology(ms(3)).trivial
    assert homology(hollow_square).betti == (0, 1)
    assert homology(SimplicialComplex.from_facets([("v",)])).betti == (0,)
    # two points: reduced H_0 = Z
    assert homology(SimplicialComplex.from_facets([("a",), ("b",)])).betti == (1,)
    # boundary of a tetrahedron is a 2-sphere
    assert homology(simplex_boundary("abcd")).betti == (0, 0, 1)


def test_homology_torsion_projective_plane():
    # 6-vertex real projective plane: H_1 = Z/2
    triangles = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
                 (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    rp2 = SimplicialComplex.from_facets([tuple(map(str, t)) for t in triangles])
    h = homology(rp2)
    assert h.betti == (0, 0, 0)
    assert h.torsion == ((), (2,), ())
    assert euler_characteristic(rp2) == 1
    assert collapse_certificate(rp2) is None


def test_homology_budget(ms):
    with pytest.raises(BudgetExceeded):
        homology(ms(5), face_budget=100)


def test_boundary_squares_to_zero(ms):
    K = ms(4)
    groups = [sorted(g) for g in K.all_faces()]
    for k in range(2, len(groups)):
        d1 = boundary_entries(groups[k - 2], groups[k - 1])
        d2 = boundary_entries(groups[k - 1], groups[k])
        prod = {}
        for (i, m), a in d1.items():
            for (m2, j), b in d2.items():
                if m == m2:
                    prod[i, j] = prod.get((i, j), 0) + a * b
        assert not any(prod.values())


@pytest.mark.parametrize("n", range(2, 7))
def test_three_contractibility_witnesses(ms, n):
    K = ms(n)
    assert euler_characteristic(K) == 1
    assert homology(K).trivial
    cert = collapse_certificate(K)
    assert cert is not None and replay_collapse(K, cert)


@pytest.mark.parametrize("n", range(2, 6))
def test_skeleton_homology_agrees_below_top(ms, n):
    K = ms(n)
    full = homology(K)
    for k in range(1, n - 1):
        sk = homology(skeleton(K, k))
        assert sk.betti[:k] == full.betti[:k]
        assert sk.torsion[:k - 1] == full.torsion[:k - 1]


def test_collapse_examples(ms, hollow_square):
    cert = collapse_certificate(ms(2))
    assert cert is not None and len(cert.pairs) == 1
    assert cert.pairs[0] == ((0,), (0, 1))
    assert collapse_certificate(ms(3)) is not None
    assert collapse_certificate(hollow_square) is None
    stuck = greedy_collapse(hollow_square)
    assert stuck.pairs == () and len(stuck.terminal) == 8


def test_collapse_replay_rejects_tampering(ms):
    K = ms(3)
    cert = collapse_certificate(K)
    assert replay_collapse(K, cert)
    tampered = CollapseCertificate(cert.pairs[1:], cert.terminal)
    assert not replay_collapse(K, tampered)


def test_circuit_examples(ms, hollow_square):
    K = ms(3)
    tri = is_circuit_contractible(K, ["++", "+-", "-+"])
    assert tri.contractible and replay_loop_witness(K, tri)
    assert len(tri.witness) == 3  # one M2 then one M1
    sq = is_circuit_contractible(K, EdgeLoop(("--", "+-", "++", "-+")))
    assert sq.contractible and replay_loop_witness(K, sq)
    for budget in (1, 10, 10**4):
        v = is_circuit_contractible(hollow_square, ["a", "b", "c", "d"], budget=budget)
        assert v.status == "unknown"
    assert is_circuit_contractible(hollow_square, ["a", "b", "c", "d"]).exhausted
    assert homology(hollow_square).betti[1] == 1
    with pytest.raises(ValueError):
        is_circuit_contractible(K, ["--", "++", "+-"])


def test_loop_witness_replay_rejects_forgery(ms):
    K = ms(3)
    forged = ContractibilityVerdict("contractible", (("++", "+-", "-+"), ("++",)))
    assert not replay_loop_witness(K, forged)


def test_simplicial_circuits_counts(ms, hollow_square):
    assert list(simplicial_circuits(ms(2))) == []
    by_len = {}
    for c in simplicial_circuits(ms(3)):
        by_len[len(c)] = by_len.get(len(c), 0) + 1
        assert len(set(c)) == len(c)
    # two triangles and the outer square
    assert by_len == {3: 2, 4: 1}
    assert [len(c) for c in simplicial_circuits(hollow_square)] == [4]
    # K4: 4 triangles, 3 squares
    k4 = SimplicialComplex.from_facets([(a, b) for a in "wxyz" for b in "wxyz" if a < b])
    lens = sorted(len(c) for c in simplicial_circuits(k4))
    assert lens == [3, 3, 3, 3, 4, 4, 4]


def test_lemma51_examples(ms, hollow_square):
    assert lemma51_verdict(ms(2)).simply_connected
    v3 = lemma51_verdict(ms(3))
    assert v3.simply_connected and v3.diameter == 2
    assert lemma51_verdict(simplex("abcde")).simply_connected
    v = lemma51_verdict(hollow_square)
    assert v.verdict == "criterion fails"
    assert v.failures == ["circuit"]
    assert homology(hollow_square).betti[1] == 1
    v4 = lemma51_verdict(ms(4))
    assert v4.failures == ["diameter"] and v4.circuits_ok
    with pytest.raises(BudgetExceeded):
        lemma51_verdict(ms(4), vertex_cap=4)


def test_lemma51_consistent_with_homology():
    complexes = [
        simplex("abc"),
        simplex_boundary("abcd"),
        cycle_graph_complex("abc"),
        SimplicialComplex.from_facets([("a", "b", "c"), ("a", "c", "d"), ("a", "d", "e")]),
    ]
    for K in complexes:
        v = lemma51_verdict(K)
        if v.simply_connected:
            assert homology(K).betti[1] == 0
    assert not lemma51_verdict(cycle_graph_complex("abc")).simply_connected
