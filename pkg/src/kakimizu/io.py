"""The ``kakimizu-complex/1`` JSON document.

Export is canonical: fixed key order, compact separators, sorted vertices
and facets, so a complex always serializes to the same bytes.  Import
re-checks every invariant and rejects anything export could not produce.
"""
from __future__ import annotations

import json
from typing import Any, Optional

from .complex import SimplicialComplex
from .cycles import Cycle, enumerate_cycles, validate_cycle
from .errors import (
    BadFormatVersion,
    InvariantViolation,
    KakimizuError,
    MalformedDocument,
)
from .knot import validate_twist_sequence
from .orientation import Orientation

FORMAT = "kakimizu-complex/1"
_KEYS = ("format", "n", "twist_sequence", "vertices", "facets", "cycles")


def export_complex(K: SimplicialComplex, include_cycles: bool = False,
                   cycles: Optional[list[Cycle]] = None) -> dict:
    doc: dict[str, Any] = {"format": FORMAT, "n": K.n}
    if K.twist_sequence is not None:
        doc["twist_sequence"] = list(K.twist_sequence)
    doc["vertices"] = list(K.vertices)
    doc["facets"] = [list(f) for f in K.facets]
    if include_cycles:
        if K.n is None:
            raise ValueError("cycles are only defined for complexes built from a tree")
        cycles = cycles if cycles is not None else enumerate_cycles(K.n)
        doc["cycles"] = [c.to_json() for c in cycles]
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def dumps_complex(K: SimplicialComplex, include_cycles: bool = False) -> str:
    return dumps(export_complex(K, include_cycles))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def import_document(doc) -> tuple[SimplicialComplex, Optional[list[Cycle]]]:
    """Parse a document (dict, str or bytes) into a complex and its cycles."""
    try:
        return _import(doc)
    except KakimizuError:
        raise
    except (TypeError, ValueError, KeyError, AttributeError, IndexError, RecursionError) as exc:
        raise MalformedDocument(f"malformed document: {exc}") from None


def import_complex(doc) -> SimplicialComplex:
    return import_document(doc)[0]


def _import(doc):
    if isinstance(doc, (bytes, bytearray)):
        doc = doc.decode("utf-8")
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"not JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedDocument("document must be a JSON object")
    if "format" not in doc:
        raise MalformedDocument("missing 'format'")
    if doc["format"] != FORMAT:
        raise BadFormatVersion(f"unsupported format {doc['format']!r}")
    unknown = set(doc) - set(_KEYS)
    if unknown:
        raise MalformedDocument(f"unknown keys {sorted(unknown)}")
    for key in ("n", "vertices", "facets"):
        if key not in doc:
            raise MalformedDocument(f"missing {key!r}")

    n = doc["n"]
    if n is not None and (not _is_int(n) or n < 1):
        raise MalformedDocument("'n' must be a positive integer or null")

    twists = doc.get("twist_sequence")
    if "twist_sequence" in doc:
        if n is None or not isinstance(twists, list) or not all(_is_int(a) for a in twists):
            raise MalformedDocument("'twist_sequence' must be a list of integers with 'n' set")
        validate_twist_sequence(twists)
        if len(twists) != n:
            raise InvariantViolation("twist sequence length differs from n")

    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise MalformedDocument("'vertices' must be a list of strings")
    if n is not None:
        for v in vertices:
            if len(v) != n - 1 or set(v) - {"+", "-"}:
                raise InvariantViolation(f"{v!r} is not an orientation string for n = {n}")

    facets = doc["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(_is_int(i) for i in f) for f in facets
    ):
        raise MalformedDocument("'facets' must be a list of lists of integers")

    K = SimplicialComplex(
        tuple(vertices),
        tuple(tuple(f) for f in facets),
        n=n,
        twist_sequence=tuple(twists) if twists is not None else None,
    )

    cycles = None
    if "cycles" in doc:
        cycles = _import_cycles(doc["cycles"], K)
    return K, cycles


def _import_cycles(raw, K: SimplicialComplex) -> list[Cycle]:
    if K.n is None:
        raise MalformedDocument("'cycles' requires 'n'")
    if not isinstance(raw, list):
        raise MalformedDocument("'cycles' must be a list")
    facet_set = set(K.facets)
    out = []
    for rec in raw:
        if not isinstance(rec, dict) or set(rec) != {"orientations", "vertex_order"}:
            raise MalformedDocument("cycle records need exactly 'orientations' and 'vertex_order'")
        orients, order = rec["orientations"], rec["vertex_order"]
        if not isinstance(orients, list) or not all(isinstance(s, str) for s in orients):
            raise MalformedDocument("cycle orientations must be strings")
        if not isinstance(order, list) or not all(_is_int(j) for j in order):
            raise MalformedDocument("cycle vertex_order must be integers")
        if any(len(s) != K.n - 1 or set(s) - {"+", "-"} for s in orients):
            raise InvariantViolation("cycle orientation does not match n")
        c = Cycle(tuple(Orientation.from_string(s) for s in orients),
                  tuple(order))
        bad = validate_cycle(c)
        if bad is not None:
            raise InvariantViolation(f"invalid cycle: {bad.clause} at {bad.k}: {bad.detail}")
        if c.canonical() != c:
            raise InvariantViolation("cycle is not in canonical rotation")
        try:
            face = tuple(sorted(K.index_of(s) for s in orients))
        except KeyError:
            raise InvariantViolation("cycle visits an unknown vertex") from None
        if face not in facet_set:
            raise InvariantViolation("cycle vertex set is not a facet")
        out.append(c)
    return out
