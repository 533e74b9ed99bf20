"""
Rendering of result tables.

Every number is emitted as a string: exact rationals as ``p/q`` (integers without a
denominator), polynomials in their printed form and floating values with the requested
number of significant digits. JSON and CSV renderings of one table carry identical tokens.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import mpmath

from p1series.exact.precision import mp_string
from p1series.exact.weighted_polynomial import WeightedPolynomial


def exact_text(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_value(value: Any, digits: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return exact_text(value)
    if isinstance(value, WeightedPolynomial):
        return str(value)
    if isinstance(value, mpmath.mpc):
        if value.imag == 0:
            return mp_string(value.real, digits)
        return f"{mp_string(value.real, digits)}{'+' if value.imag >= 0 else '-'}{mp_string(abs(value.imag), digits)}j"
    if isinstance(value, (mpmath.mpf, float)):
        return mp_string(value, digits)
    return str(value)


@dataclass
class ResultTable:
    """A rectangular result with a header of metadata."""
    title: str
    columns: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    meta: Dict[str, Any] = field(default_factory=dict)

    def add(self, *row):
        self.rows.append(row)

    def tokens(self, digits: int) -> List[List[str]]:
        return [[format_value(value, digits) for value in row] for row in self.rows]


def to_json(table: ResultTable, digits: int) -> str:
    document = {
        "title": table.title,
        "meta": {key: format_value(value, digits) for key, value in table.meta.items()},
        "columns": list(table.columns),
        "rows": [dict(zip(table.columns, row)) for row in table.tokens(digits)],
    }
    return json.dumps(document, indent=2) + "\n"


def to_csv(table: ResultTable, digits: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    writer.writerows(table.tokens(digits))
    return buffer.getvalue()


def render(table: ResultTable, format: str, digits: int) -> str:
    if format == "csv":
        return to_csv(table, digits)
    return to_json(table, digits)
