"""End-to-end verification run over a range of tree sizes."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .complex import build_ms_complex, euler_characteristic, is_flag
from .cycles import CYCLE_CAP, cycle_table
from .errors import BudgetExceeded, ConfigInvalid
from .homotopy import (
    CIRCUIT_BUDGET,
    FACE_BUDGET,
    collapse_certificate,
    homology,
    lemma51_verdict,
    replay_collapse,
)
from .knot import TwistSequence, bounds, genus, slope
from .metric import CheckResult, verify_metric_claims
from .orientation import HARD_CAP

# per-feature practical caps on n
HOMOTOPY_CAP = 6
FLAG_CAP = 6
LEMMA51_CAP = 6
EXHAUSTIVE_PATH_CAP = 6


@dataclass
class RunConfig:
    n_lo: int
    n_hi: int
    cycle_cap: int = CYCLE_CAP
    face_budget: int = FACE_BUDGET
    circuit_budget: int = CIRCUIT_BUDGET
    homology: bool = True
    collapse: bool = True
    lemma51: bool = True
    flag: bool = True
    samples: int = 200
    seed: int = 0
    twists: Optional[TwistSequence] = None
    out: Optional[str] = None

    def validate(self) -> None:
        for name in ("n_lo", "n_hi", "cycle_cap", "face_budget", "circuit_budget", "samples"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ConfigInvalid(f"{name} must be a positive integer, got {v!r}")
        if self.n_lo > self.n_hi:
            raise ConfigInvalid(f"empty n range {self.n_lo}..{self.n_hi}")
        if self.n_hi > HARD_CAP or self.cycle_cap > HARD_CAP:
            raise ConfigInvalid(f"n range and cycle cap must stay within the hard cap {HARD_CAP}")
        if self.n_hi > self.cycle_cap:
            raise ConfigInvalid(f"n = {self.n_hi} exceeds the cycle cap {self.cycle_cap}")
        if self.twists is not None:
            if self.n_lo != self.n_hi or self.n_lo != self.twists.m:
                raise ConfigInvalid("a twist sequence fixes n to its length")
            if self.twists.m % 2:
                raise ConfigInvalid("a twist sequence must have even length")


@dataclass
class VerificationReport:
    version: str
    input: dict
    checks: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self, timing: bool = True) -> dict:
        checks = self.checks if timing else [
            {k: v for k, v in c.items() if k != "seconds"} for c in self.checks
        ]
        return {
            "tool": "kakimizu",
            "version": self.version,
            "input": self.input,
            "pass": self.passed,
            "checks": checks,
        }


def _timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _skipped(name, claim, why):
    return CheckResult(name, claim, None, f"skipped ({why})", True, skipped=True)


def checks_for_n(n: int, cfg: RunConfig) -> list[CheckResult]:
    out: list[CheckResult] = []
    K, secs = _timed(lambda: build_ms_complex(n, cap=cfg.cycle_cap))

    out.append(CheckResult("vertex_count", "2^(n-1) orientations", 2 ** (n - 1),
                           len(K.vertices), len(K.vertices) == 2 ** (n - 1), secs))
    sizes = sorted({len(f) for f in K.facets})
    out.append(CheckResult("purity", "every facet has n vertices (cube triangulation)",
                           [n], sizes, sizes == [n]))

    paths, _ = cycle_table(n, cfg.cycle_cap)
    bands, secs = _timed(lambda: {tuple(sorted({bin(b).count("1") for b in row}))
                                  for row in paths.tolist()})
    if n >= 2:
        ok = all(len(b) == 2 and b[1] == b[0] + 1 for b in bands)
        out.append(CheckResult("cycle_weight_band", "cycle weights are two successive integers",
                               "two successive integers", sorted(bands)[:4] if not ok else "ok",
                               ok, secs))

    out.extend(verify_metric_claims(n, K, samples=cfg.samples, seed=cfg.seed,
                                    exhaustive_lemma71=n <= EXHAUSTIVE_PATH_CAP))

    if cfg.flag:
        if n <= FLAG_CAP:
            res, secs = _timed(lambda: is_flag(K))
            out.append(CheckResult("flag", "the complex is flag", True, res.is_flag,
                                   res.is_flag, secs))
        else:
            out.append(_skipped("flag", "the complex is flag", "cap"))

    try:
        chi, secs = _timed(lambda: (K.all_faces(limit=cfg.face_budget), euler_characteristic(K))[1])
        out.append(CheckResult("euler_characteristic", "chi = 1 (cube triangulation)", 1, chi,
                               chi == 1, secs))
    except BudgetExceeded:
        out.append(_skipped("euler_characteristic", "chi = 1 (cube triangulation)", "face budget"))

    if cfg.homology:
        if n <= HOMOTOPY_CAP:
            h, secs = _timed(lambda: homology(K, cfg.face_budget))
            out.append(CheckResult("reduced_homology", "trivial reduced integral homology",
                                   "trivial", h.to_json(), h.trivial, secs))
        else:
            out.append(_skipped("reduced_homology", "trivial reduced integral homology", "cap"))
    if cfg.collapse:
        if n <= HOMOTOPY_CAP:
            cert, secs = _timed(lambda: collapse_certificate(K, cfg.face_budget))
            ok = cert is not None and replay_collapse(K, cert)
            out.append(CheckResult("collapse", "collapses to a point", "collapsible",
                                   {"pairs": len(cert.pairs)} if cert else "stuck", ok, secs))
        else:
            out.append(_skipped("collapse", "collapses to a point", "cap"))
    if cfg.lemma51:
        claim = "short-circuit criterion: simply connected when diameter <= 2"
        if n <= LEMMA51_CAP:
            v, secs = _timed(lambda: lemma51_verdict(K, cfg.circuit_budget))
            if n <= 3:
                expected = "simply-connected"
                ok = v.simply_connected
            else:
                # diameter n - 1 > 2 rules the criterion out; circuits must still fill
                expected = "criterion fails (diameter only)"
                ok = v.failures == ["diameter"]
            out.append(CheckResult("lemma51", claim, expected, v.to_json(), ok, secs))
        else:
            out.append(_skipped("lemma51", claim, "cap"))
    return out


def knot_checks(seq: TwistSequence) -> list[CheckResult]:
    g = genus(seq)
    s = slope(seq)
    b = bounds(g)
    return [
        CheckResult("genus", "genus equals half the twist count", len(seq.coefficients) // 2, g,
                    g == len(seq.coefficients) // 2),
        CheckResult("slope", "reduced rational slope", "reduced", s.to_json(), True),
        CheckResult("bounds", "closed-form diameter/intersection bounds",
                    {"diameter_bound": 2 * g * (3 * g - 2) + 1,
                     "intersection_bound": 2 * (3 * g - 2) ** 2},
                    b.to_json(),
                    b.diameter_bound == 2 * g * (3 * g - 2) + 1
                    and b.intersection_bound == 2 * (3 * g - 2) ** 2),
    ]


def run_verification(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    if cfg.twists is not None:
        descriptor = {"twist_sequence": list(cfg.twists.coefficients), "n": cfg.twists.m}
    else:
        descriptor = {"n_range": [cfg.n_lo, cfg.n_hi]}
    report = VerificationReport(__version__, descriptor)
    if cfg.twists is not None:
        for c in knot_checks(cfg.twists):
            report.checks.append({"n": cfg.twists.m, **c.to_json()})
    for n in range(cfg.n_lo, cfg.n_hi + 1):
        for c in checks_for_n(n, cfg):
            report.checks.append({"n": n, **c.to_json()})
    return report
