import pytest

from kakimizu.errors import ConfigInvalid
from kakimizu.knot import validate_twist_sequence
from kakimizu.report import RunConfig, run_verification


def _by_name(report, n):
    return {c["name"]: c for c in report.checks if c["n"] == n}


def test_all_toggles_small_range():
    report = run_verification(RunConfig(2, 4))
    assert report.passed, [c for c in report.checks if not c["pass"]]
    for n in (2, 3, 4):
        names = set(_by_name(report, n))
        assert {"vertex_count", "purity", "diameter", "weight_lipschitz", "flag",
                "euler_characteristic", "reduced_homology", "collapse", "lemma51",
                "cycle_weight_band", "extremal_distance", "inductive_path"} <= names
    assert "diameter_bound" in _by_name(report, 4)
    assert "diameter_bound" not in _by_name(report, 3)


def test_minimal_report():
    report = run_verification(RunConfig(2, 2))
    checks = _by_name(report, 2)
    assert checks["diameter"]["actual"] == 1
    assert checks["vertex_count"]["actual"] == 2
    assert checks["euler_characteristic"]["actual"] == 1
    assert report.to_json()["pass"] is True


@pytest.mark.parametrize(
    "cfg",
    [
        RunConfig(2, 20),
        RunConfig(3, 2),
        RunConfig(0, 2),
        RunConfig(2, 4, circuit_budget=0),
        RunConfig(2, 11),
        RunConfig(2, 4, cycle_cap=13),
        RunConfig(3, 3, twists=validate_twist_sequence([2, 2])),
        RunConfig(3, 3, twists=validate_twist_sequence([2, 2, 2])),
    ],
)
def test_config_invalid(cfg):
    with pytest.raises(ConfigInvalid):
        run_verification(cfg)


def test_caps_reported_as_skipped():
    report = run_verification(RunConfig(7, 7, lemma51=False, homology=True))
    checks = _by_name(report, 7)
    assert checks["reduced_homology"]["skipped"] and checks["reduced_homology"]["pass"]
    assert checks["flag"]["actual"] == "skipped (cap)"
    assert "lemma51" not in checks
    assert report.passed


def test_face_budget_skip():
    report = run_verification(RunConfig(5, 5, face_budget=50, homology=False, collapse=False,
                                        lemma51=False))
    assert _by_name(report, 5)["euler_characteristic"]["skipped"]


def test_determinism_modulo_timing():
    a = run_verification(RunConfig(2, 5, lemma51=False)).to_json(timing=False)
    b = run_verification(RunConfig(2, 5, lemma51=False)).to_json(timing=False)
    assert a == b


@pytest.mark.slow
def test_full_range_to_six():
    report = run_verification(RunConfig(2, 6))
    assert report.passed
    lemma = _by_name(report, 6)["lemma51"]["actual"]
    assert lemma["failed_preconditions"] == ["diameter"]
    assert lemma["short_circuits_contractible"] is True
