"""JSON wire formats.

Field descriptor: {"p": 2, "h": 2, "modulus": [1, 1, 1]} (little-endian
coefficients).  Matrix: {"rows": R, "cols": C, "entries": [[int, ...]]}
using the integer element encoding.  Code: {"field": {...}, "n": N,
"k": K, "generator": [[...]]}, optionally carrying a "certificate"
block.  Rationals are rendered as "num/den" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .codes import LinearCode, make_code
from .errors import HypothesisViolated
from .field import FiniteField, make_field
from .matrix import MatrixGF, matrix


def field_to_json(f: FiniteField) -> dict:
    return {"p": f.p, "h": f.h, "modulus": list(f.modulus)}


def field_from_json(obj: dict) -> FiniteField:
    try:
        return make_field(int(obj["p"]), int(obj["h"]), obj["modulus"])
    except (KeyError, TypeError) as exc:
        raise HypothesisViolated(f"bad field descriptor: {exc}") from exc


def matrix_to_json(m: MatrixGF) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [list(r) for r in m.entries]}


def matrix_from_json(field: FiniteField, obj: dict) -> MatrixGF:
    try:
        m = matrix(field, obj["entries"])
    except (KeyError, TypeError, ValueError) as exc:
        raise HypothesisViolated(f"bad matrix descriptor: {exc}") from exc
    if m.rows != obj.get("rows", m.rows) or m.cols != obj.get("cols", m.cols):
        raise HypothesisViolated("matrix shape disagrees with its entries")
    return m


def code_to_json(c: LinearCode, certificate: dict | None = None) -> dict:
    obj = {
        "field": field_to_json(c.field),
        "n": c.n,
        "k": c.k,
        "generator": [list(r) for r in c.generator.entries],
    }
    if certificate is not None:
        obj["certificate"] = certificate
    return obj


def code_from_json(obj: dict) -> tuple[LinearCode, dict | None]:
    try:
        field = field_from_json(obj["field"])
        gen = obj["generator"]
        n, k = int(obj["n"]), int(obj["k"])
    except (KeyError, TypeError, ValueError) as exc:
        raise HypothesisViolated(f"bad code descriptor: {exc}") from exc
    try:
        code = make_code(field, gen)
    except ValueError as exc:
        raise HypothesisViolated(f"bad generator: {exc}") from exc
    if code.n != n or code.k != k:
        raise HypothesisViolated(
            f"declared [n, k] = [{n}, {k}] but generator is "
            f"[{code.n}, {code.k}]"
        )
    return code, obj.get("certificate")


def jsonable(value):
    """Recursively convert Fractions to 'num/den' strings."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2) + "\n"
