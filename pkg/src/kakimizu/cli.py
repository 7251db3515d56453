"""Command-line entry point.

Every subcommand writes JSON to standard output, or to ``--out``.  Exit
codes: 0 success / all checks pass, 1 some check failed, 2 usage or input
error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .complex import build_ms_complex, euler_characteristic, f_vector, is_flag
from .cycles import CYCLE_CAP
from .errors import KakimizuError, StepNotAnEdge
from .homotopy import (
    CIRCUIT_BUDGET,
    FACE_BUDGET,
    collapse_certificate,
    homology,
    lemma51_verdict,
)
from .io import dumps, export_complex, import_document
from .knot import bounds, genus, parse_twists, slope
from .metric import distance, lemma71_path, one_skeleton_graph
from .report import RunConfig, run_verification

log = logging.getLogger("kakimizu")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
UNICODE_MINUS = "\u2212"


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_output(p):
    p.add_argument("--out", help="write the JSON document to PATH instead of stdout")
    p.add_argument("--json", action="store_true",
                   help="also print JSON to stdout when --out is given")


def _add_target(p, allow_range=False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive, help="number of tree vertices")
    g.add_argument("--twists", help="comma separated twist coefficients a1,a2,...")
    if allow_range:
        g.add_argument("--n-range", type=_n_range, metavar="LO..HI")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kakimizu", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build MS(K) and export it")
    _add_target(p)
    p.add_argument("--include-cycles", action="store_true")
    p.add_argument("--cycle-cap", type=_positive, default=CYCLE_CAP)
    _add_output(p)

    p = sub.add_parser("analyze", help="topological certificates for a complex file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--collapse", action="store_true")
    p.add_argument("--lemma51", action="store_true")
    p.add_argument("--flag", action="store_true")
    p.add_argument("--face-budget", type=_positive, default=FACE_BUDGET)
    p.add_argument("--circuit-budget", type=_positive, default=CIRCUIT_BUDGET)
    _add_output(p)

    p = sub.add_parser("path", help="distance and a shortest path between two orientations")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--method", choices=["bfs", "lemma71"], default="bfs")
    _add_output(p)

    p = sub.add_parser("verify", help="run the verification harness")
    _add_target(p, allow_range=True)
    p.add_argument("--cycle-cap", type=_positive, default=CYCLE_CAP)
    p.add_argument("--face-budget", type=_positive, default=FACE_BUDGET)
    p.add_argument("--circuit-budget", type=_positive, default=CIRCUIT_BUDGET)
    p.add_argument("--samples", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=0)
    for name in ("homology", "collapse", "lemma51", "flag"):
        p.add_argument(f"--no-{name}", dest=name, action="store_false")
    p.add_argument("--no-timing", action="store_true", help="omit per-check timings")
    _add_output(p)

    p = sub.add_parser("slope", help="exact slope of the knot")
    p.add_argument("--twists", required=True)
    _add_output(p)

    p = sub.add_parser("bounds", help="closed-form bounds for a genus")
    p.add_argument("--genus", type=int, required=True)
    _add_output(p)
    return parser


def _emit(args, payload, compact=False):
    text = dumps(payload) if compact else json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if args.json:
            sys.stdout.write(text)
    else:
        sys.stdout.write(text)


def _load(path):
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return import_document(raw)[0]


def _target(args):
    if getattr(args, "twists", None):
        seq = parse_twists(args.twists)
        genus(seq)
        return seq.m, seq
    return args.n, None


def cmd_build(args):
    n, seq = _target(args)
    K = build_ms_complex(n, cap=args.cycle_cap,
                         twist_sequence=seq.coefficients if seq else None)
    _emit(args, export_complex(K, include_cycles=args.include_cycles), compact=True)
    return EXIT_OK


def cmd_analyze(args):
    K = _load(args.infile)
    fv = f_vector(K)
    out = {
        "n": K.n,
        "vertices": len(K.vertices),
        "facets": len(K.facets),
        "f_vector": list(fv.counts),
        "euler_characteristic": euler_characteristic(K),
    }
    if args.flag:
        res = is_flag(K)
        out["flag"] = {"is_flag": res.is_flag,
                       "witness": list(res.witness_labels) if res.witness_labels else None}
    if args.homology:
        out["homology"] = homology(K, args.face_budget).to_json()
    if args.collapse:
        cert = collapse_certificate(K, args.face_budget)
        out["collapse"] = ({"success": True, **cert.to_json(K)} if cert
                           else {"success": False, "status": "inconclusive"})
    if args.lemma51:
        out["lemma51"] = lemma51_verdict(K, args.circuit_budget).to_json()
    _emit(args, out)
    return EXIT_OK


def cmd_path(args):
    K = _load(args.infile)
    gr = one_skeleton_graph(K)
    if args.method == "bfs":
        _, witness = distance(gr, args.src, args.dst)
    else:
        try:
            witness = lemma71_path(args.src, args.dst, gr)
        except StepNotAnEdge as exc:
            _emit(args, {"error": "StepNotAnEdge", "step": exc.k, "detail": str(exc)})
            return EXIT_FAIL
    _emit(args, {"method": args.method, **witness.to_json()})
    return EXIT_OK


def cmd_verify(args):
    seq = None
    if args.n_range:
        lo, hi = args.n_range
    else:
        n, seq = _target(args)
        lo = hi = n
    cfg = RunConfig(
        n_lo=lo, n_hi=hi, cycle_cap=args.cycle_cap, face_budget=args.face_budget,
        circuit_budget=args.circuit_budget, homology=args.homology, collapse=args.collapse,
        lemma51=args.lemma51, flag=args.flag, samples=args.samples, seed=args.seed,
        twists=seq, out=args.out,
    )
    report = run_verification(cfg)
    _emit(args, report.to_json(timing=not args.no_timing))
    for c in report.checks:
        log.info("%s n=%s %s: %s", "PASS" if c["pass"] else "FAIL", c["n"], c["name"], c["actual"])
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_slope(args):
    seq = parse_twists(args.twists)
    _emit(args, {"twists": list(seq.coefficients), **slope(seq).to_json()})
    return EXIT_OK


def cmd_bounds(args):
    _emit(args, bounds(args.genus).to_json())
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "analyze": cmd_analyze,
    "path": cmd_path,
    "verify": cmd_verify,
    "slope": cmd_slope,
    "bounds": cmd_bounds,
}


def _shield_signs(argv):
    """argparse drops values such as ``--from=--``; spell their minus signs
    with U+2212, which orientation parsing accepts as ``-``."""
    out = []
    for tok in argv:
        opt, eq, val = tok.partition("=")
        if eq and opt in ("--from", "--to") and val and not set(val) - {"+", "-"}:
            tok = opt + "=" + val.replace("-", UNICODE_MINUS)
        out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_shield_signs(sys.argv[1:] if argv is None else list(argv)))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except (KakimizuError, UsageError, ValueError) as exc:
        sys.stderr.write(f"kakimizu {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
