"""JSON / CSV / plain-text rendering with canonical ordering."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from . import __version__
from .polytope import HalfSpace

META = {
    "tool": "stablehyper",
    "version": __version__,
    "arithmetic": "exact: python int and fractions.Fraction",
}


def halfspace_dict(h: HalfSpace) -> dict:
    return {"normal": list(h.normal), "offset": h.offset}


def describe_halfspace(h: HalfSpace) -> str:
    """Human form, e.g. ``x1 + x2 <= 1`` or ``x3 >= 0``."""
    terms = [(a, i + 1) for i, a in enumerate(h.normal) if a]
    if terms and all(a < 0 for a, _ in terms):
        lhs = " + ".join(_term(-a, i) for a, i in terms)
        return f"{lhs} >= {-h.offset}"
    lhs = " + ".join(_term(a, i) for a, i in terms) if terms else "0"
    return f"{lhs} <= {h.offset}".replace("+ -", "- ")


def _term(a: int, i: int) -> str:
    if a == 1:
        return f"x{i}"
    if a == -1:
        return f"-x{i}"
    return f"{a}*x{i}"


def envelope(params: dict, result: Any) -> dict:
    return {"params": params, "result": result, "meta": dict(META)}


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(x) for x in row])
    return buf.getvalue()


def _csv_cell(x: Any) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    return str(x)
