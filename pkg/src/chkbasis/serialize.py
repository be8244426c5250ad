"""Exact-rational text formats: "p/q" strings, JSON documents, CSV export."""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction

from .chk import MassParams
from .convert import BASIS_LAYOUT, ConversionMatrix, DiscrepancyReport
from .exact import PiScalar

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?digits[/digits]``; no whitespace, no decimals."""
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(value) -> str:
    return str(Fraction(value))


def parse_rational_list(text: str) -> list[Fraction]:
    """Coefficients as a JSON list, a JSON object with "coefficients", or one per line."""
    stripped = text.strip()
    if stripped.startswith("[") or stripped.startswith("{"):
        data = json.loads(stripped)
        if isinstance(data, dict):
            data = data["coefficients"]
        return [parse_rational(str(v)) if isinstance(v, int) else parse_rational(v) for v in data]
    return [parse_rational(line.strip()) for line in stripped.splitlines() if line.strip()]


def to_jsonable(obj):
    """Recursively replace Fractions, PiScalars and dataclasses with JSON types."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, PiScalar):
        return {"rational": format_rational(obj.rational_part), "pi": format_rational(obj.pi_part)}
    if isinstance(obj, MassParams):
        return {"mass_left": format_rational(obj.mass_left), "mass_right": format_rational(obj.mass_right)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def matrix_to_dict(m: ConversionMatrix) -> dict:
    return {
        "n": m.n,
        "mass_left": format_rational(m.params.mass_left),
        "mass_right": format_rational(m.params.mass_right),
        "direction": m.direction,
        "mode": m.mode,
        "layout": m.layout,
        "entries": [[format_rational(v) for v in row] for row in m.entries],
    }


def matrix_to_json(m: ConversionMatrix) -> str:
    return json.dumps(matrix_to_dict(m), indent=2)


def matrix_from_json(text: str) -> ConversionMatrix:
    data = json.loads(text)
    params = MassParams(parse_rational(data["mass_left"]), parse_rational(data["mass_right"]))
    entries = [[parse_rational(v) for v in row] for row in data["entries"]]
    return ConversionMatrix(int(data["n"]), params, data["direction"], data["mode"], entries,
                            data.get("layout", BASIS_LAYOUT))


def matrix_to_csv(m: ConversionMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m.entries:
        writer.writerow([format_rational(v) for v in row])
    return buf.getvalue()


def matrix_entries_from_csv(text: str) -> list[list[Fraction]]:
    """Entries only; CSV carries no metadata."""
    return [[parse_rational(v) for v in row] for row in csv.reader(io.StringIO(text)) if row]


def report_to_dict(rep: DiscrepancyReport) -> dict:
    return to_jsonable({
        "n": rep.n,
        "mass_left": rep.params.mass_left,
        "mass_right": rep.params.mass_right,
        "flags": rep.flags,
        "findings": rep.findings,
        "n_matrix": rep.n_matrix,
        "row_ratios": rep.row_ratios,
        "m_matrix": rep.m_matrix,
        "ninv_matrix": rep.ninv_matrix,
        "inverse_composition": rep.inverse_composition,
        "gram": rep.gram,
        "inner_products": rep.inner_products,
    })
