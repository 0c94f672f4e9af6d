"""Shared JSON conventions: schema tag, exact rationals, big-integer matrices.

Every document this package reads or writes carries ``"schema": 1``.
Rationals travel as strings "p/q" (or "p" when the denominator is 1) and
matrix entries as decimal strings, so arbitrary precision survives JSON.
"""

import json
from fractions import Fraction

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    """Input document does not match the expected schema."""


def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_str(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise SchemaError(f"rational must be 'p/q' string or integer, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}: {exc}") from None


def matrix_to_json(rows) -> list:
    """Integer matrix -> rows of decimal strings."""
    return [[str(int(x)) for x in row] for row in rows]


def matrix_from_json(rows) -> list:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise SchemaError("matrix must be a list of rows")
    try:
        out = [[int(x) for x in row] for row in rows]
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"matrix entries must be integer strings: {exc}") from None
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise SchemaError("ragged matrix")
    return out


def check_schema(doc, what):
    if not isinstance(doc, dict):
        raise SchemaError(f"{what}: expected a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"{what}: missing or unsupported schema tag "
                          f"(want {SCHEMA_VERSION}, got {doc.get('schema')!r})")


def dumps_canonical(doc) -> str:
    """Deterministic serialization: sorted keys, fixed separators."""
    return json.dumps(doc, sort_keys=True, separators=(",", ": "), indent=1)
