"""Accuracy audit of the old approximation rules for π and √2.

Every number here is a certified interval: the "true" π comes from a Machin
series with an explicit remainder bound, √2 from the exact scalar layer.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .constructions import (COARSE_RATIO, FINE_RATIO, MAITRAYANIYA_RATIO, PythagoreanTriple,
                            sqrt2_savisesha, triple_catalog)
from .errors import EmptyRecordSet, NotGeometric, UnsupportedFormat
from .interval import Interval, certified_fixed, certified_sci
from .scalar import ConstructibleScalar, ScalarLike, certified_floor, evaluate, parse_scalar, sqrt
from .units import APASTAMBA, BAUDHAYANA, KATYAYANA, MANAVA

MAITRAYANIYA = "Maitrayaniya"
BABYLONIAN = "Babylonian"

DEFAULT_PRECISION = 50
DISPLAY_DIGITS = 8


class ReferenceKind(enum.Enum):
    PI = "Pi"
    SQRT2 = "Sqrt2"


class Direction(enum.Enum):
    SQUARE_TO_CIRCLE = "SquareToCircle"
    CIRCLE_TO_SQUARE = "CircleToSquare"
    SCALAR = "Scalar"


@dataclass(frozen=True)
class ApproximationRecord:
    """A named rule and the exact number it amounts to.

    For ``SQUARE_TO_CIRCLE`` the value is the circle radius per unit side of
    the square; for ``CIRCLE_TO_SQUARE`` it is the square side per unit
    diameter; for ``SCALAR`` it is the approximation itself.  A record with
    no value is a placeholder for a rule whose formula is not available.
    """

    name: str
    exact_value: Optional[ConstructibleScalar]
    reference_kind: ReferenceKind
    direction: Direction
    attested_in: frozenset = frozenset()
    note: str = ""

    def __post_init__(self):
        if self.exact_value is not None:
            value = ConstructibleScalar.coerce(self.exact_value)
            object.__setattr__(self, "exact_value", value)
            if evaluate(value, 10).lower <= 0:
                raise ValueError(f"{self.name}: value must be positive")
        object.__setattr__(self, "attested_in", frozenset(self.attested_in))

    @property
    def placeholder(self) -> bool:
        return self.exact_value is None

    @property
    def geometric(self) -> bool:
        return self.direction is not Direction.SCALAR


@dataclass(frozen=True)
class ErrorReport:
    record: ApproximationRecord
    reference_interval: Interval
    relative_error: Interval
    implied_pi: Optional[Interval] = None
    agreement_digits: int = 0
    absolute_error: Optional[Interval] = None
    unit_area: Optional[Interval] = None


# -- reference values -----------------------------------------------------------

def _arctan_inv_bracket(x: int, tolerance: Fraction) -> tuple:
    """Two partial sums of arctan(1/x) bracketing the true value."""
    total = Fraction(0)
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        nxt = total + (term if k % 2 == 0 else -term)
        if term < tolerance:
            return (total, nxt) if total < nxt else (nxt, total)
        total = nxt
        k += 1


def reference_pi(precision: int = DEFAULT_PRECISION) -> Interval:
    """Certified enclosure of π from Machin's formula 16 atan(1/5) - 4 atan(1/239).

    The arctangent series alternate with decreasing terms, so consecutive
    partial sums bracket each value.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    tol = Fraction(1, 10 ** (precision + 2))
    lo5, hi5 = _arctan_inv_bracket(5, tol)
    lo239, hi239 = _arctan_inv_bracket(239, tol)
    return Interval(16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239, precision)


def reference_sqrt2(precision: int = DEFAULT_PRECISION) -> Interval:
    return evaluate(sqrt(2), precision)


# -- agreement of decimal expansions ---------------------------------------------

def _floor_scaled(value, scale: int, precision: int) -> int:
    if isinstance(value, Interval):
        lo, hi = math.floor(value.lower * scale), math.floor(value.upper * scale)
        if lo != hi:
            raise ArithmeticError("enclosure too wide to fix the digit")
        return lo
    return certified_floor(value, scale)


def agreement_digits(candidate, reference, max_places: int) -> int:
    """Number of leading decimal places on which the two expansions agree.

    Digits are compared as written out (1.41421|57 against 1.41421|36
    agree on five places).  Either argument may be a scalar or an interval.
    """
    if _floor_scaled(candidate, 1, max_places) != _floor_scaled(reference, 1, max_places):
        return 0
    for k in range(1, max_places + 1):
        scale = 10 ** k
        try:
            same = _floor_scaled(candidate, scale, max_places) == _floor_scaled(reference, scale, max_places)
        except ArithmeticError:
            return k - 1
        if not same:
            return k - 1
    return max_places


# -- per-record analysis -------------------------------------------------------------

def implied_pi(record: ApproximationRecord, precision: int = DEFAULT_PRECISION) -> Interval:
    """The value of π for which the rule would be exact.

    Circle from square with radius ρ per unit side: 1/ρ².  Square from
    circle with side σ per unit diameter: 4σ².
    """
    if not record.geometric:
        raise NotGeometric(f"{record.name} is not a geometric rule")
    if record.placeholder:
        raise NotGeometric(f"{record.name} has no formula")
    v = record.exact_value
    if record.direction is Direction.SQUARE_TO_CIRCLE:
        return evaluate(1 / (v * v), precision)
    return evaluate(v * v * 4, precision)


def area_error(record: ApproximationRecord, precision: int = DEFAULT_PRECISION) -> ErrorReport:
    """Relative area error (constructed - intended) / intended.

    Circle from unit square: π ρ² - 1.  Square from a circle of unit
    radius: 4 σ² / π - 1.
    """
    if not record.geometric:
        raise NotGeometric(f"{record.name} is not a geometric rule")
    if record.placeholder:
        raise NotGeometric(f"{record.name} has no formula")
    work = precision + 10
    pi = reference_pi(work)
    v = record.exact_value
    ratio_sq = evaluate(v * v, work)
    if record.direction is Direction.SQUARE_TO_CIRCLE:
        unit_area = pi.mul(ratio_sq)
        rel = unit_area - 1
    else:
        unit_area = ratio_sq * 4
        rel = unit_area.div(pi) - 1
    ip = implied_pi(record, work)
    return ErrorReport(
        record=record,
        reference_interval=pi.with_precision(precision),
        relative_error=rel.with_precision(precision),
        implied_pi=ip.with_precision(precision),
        agreement_digits=agreement_digits(ip, pi, precision),
        unit_area=unit_area.with_precision(precision),
    )


def compare_sqrt2(candidate: ScalarLike, precision: int = DEFAULT_PRECISION,
                  record: Optional[ApproximationRecord] = None) -> ErrorReport:
    """Compare an approximation with √2: absolute and relative error, shared digits."""
    candidate = ConstructibleScalar.coerce(candidate)
    if record is None:
        record = ApproximationRecord(str(candidate), candidate, ReferenceKind.SQRT2, Direction.SCALAR)
    root = sqrt(2)
    work = precision + 10
    diff = candidate - root
    return ErrorReport(
        record=record,
        reference_interval=evaluate(root, precision),
        relative_error=evaluate(diff / root, work).with_precision(precision),
        agreement_digits=agreement_digits(candidate, root, precision),
        absolute_error=evaluate(diff, work).with_precision(precision),
    )


def report_for(record: ApproximationRecord, precision: int = DEFAULT_PRECISION) -> Optional[ErrorReport]:
    if record.placeholder:
        return None
    if record.reference_kind is ReferenceKind.SQRT2:
        return compare_sqrt2(record.exact_value, precision, record)
    return area_error(record, precision)


# -- catalog --------------------------------------------------------------------------

def builtin_catalog() -> list[ApproximationRecord]:
    """The circle and √2 rules, tagged with the texts that record them."""
    return [
        ApproximationRecord(
            "circling the square", (2 + sqrt(2)) / 6, ReferenceKind.PI,
            Direction.SQUARE_TO_CIRCLE, {BAUDHAYANA, KATYAYANA},
            "radius = half side + a third of the part of the half diagonal beyond it"),
        ApproximationRecord(
            "radius 9/16 of side", MAITRAYANIYA_RATIO, ReferenceKind.PI,
            Direction.SQUARE_TO_CIRCLE, {MAITRAYANIYA}),
        ApproximationRecord(
            "Manava circling", None, ReferenceKind.PI, Direction.SQUARE_TO_CIRCLE, {MANAVA},
            "placeholder: construction not given, no formula"),
        ApproximationRecord(
            "fine squaring", FINE_RATIO, ReferenceKind.PI,
            Direction.CIRCLE_TO_SQUARE, {BAUDHAYANA},
            "7/8 + 1/(8*29) - 1/(8*29*6) + 1/(8*29*6*8) of the diameter"),
        ApproximationRecord(
            "coarse squaring 13/15", COARSE_RATIO, ReferenceKind.PI,
            Direction.CIRCLE_TO_SQUARE, {BAUDHAYANA, KATYAYANA, APASTAMBA}),
        ApproximationRecord(
            "savisesha sqrt2", sqrt2_savisesha(), ReferenceKind.SQRT2,
            Direction.SCALAR, {BAUDHAYANA, APASTAMBA, KATYAYANA},
            "1 + 1/3 + 1/(3*4) - 1/(3*4*34)"),
    ]


def comparison_records() -> list[ApproximationRecord]:
    """Outside values shown next to the catalog for comparison."""
    return [
        ApproximationRecord(
            "Babylonian sqrt2", Fraction(14142129, 10 ** 7), ReferenceKind.SQRT2,
            Direction.SCALAR, {BABYLONIAN}, "sexagesimal 1;24,51,10"),
    ]


def generate_triples(limit: int) -> list[PythagoreanTriple]:
    """All primitive triples with hypotenuse at most ``limit``, by Euclid's formula.

    Smaller leg first; sorted by hypotenuse, then by the smaller leg.
    Triples of the old list carry its attestation tags.
    """
    if limit < 5:
        raise ValueError("limit must be at least 5")
    known = {t.as_tuple(): t.attested_in for t in triple_catalog()}
    found = []
    m = 2
    while m * m + 1 <= limit:
        for n in range(1, m):
            if (m - n) % 2 == 0 or math.gcd(m, n) != 1:
                continue
            c = m * m + n * n
            if c > limit:
                break
            a, b = sorted((m * m - n * n, 2 * m * n))
            found.append((c, a, b))
        m += 1
    found.sort()
    return [PythagoreanTriple(a, b, c, known.get((a, b, c), frozenset())) for c, a, b in found]


# -- tables -------------------------------------------------------------------------------

COLUMNS = ("name", "kind", "direction", "expression", "decimal", "unit_area",
           "implied_pi_or_sqrt2_error", "relative_error_pct", "agreement_digits", "attested")


def _row(record: ApproximationRecord, precision: int) -> dict:
    row = {
        "name": record.name,
        "kind": record.reference_kind.value,
        "direction": record.direction.value,
        "attested": ";".join(sorted(record.attested_in)),
    }
    report = report_for(record, precision)
    if report is None:
        row.update(expression="n/a", decimal="n/a", unit_area="n/a",
                   implied_pi_or_sqrt2_error="n/a", relative_error_pct="n/a",
                   agreement_digits="n/a")
        return row
    value = record.exact_value
    row["expression"] = str(value)
    row["decimal"] = evaluate(value, precision).decimal(DISPLAY_DIGITS)
    if report.unit_area is not None:
        row["unit_area"] = report.unit_area.decimal(DISPLAY_DIGITS)
    else:
        row["unit_area"] = ""
    if report.implied_pi is not None:
        row["implied_pi_or_sqrt2_error"] = report.implied_pi.decimal(DISPLAY_DIGITS)
    else:
        err = report.absolute_error
        row["implied_pi_or_sqrt2_error"] = certified_sci(err.lower, err.upper, 4, sign=True)
    pct = report.relative_error * 100
    row["relative_error_pct"] = certified_fixed(pct.lower, pct.upper, 2, sign=True)
    row["agreement_digits"] = str(report.agreement_digits)
    return row


def error_rows(records: Sequence[ApproximationRecord], precision: int = DEFAULT_PRECISION) -> list[dict]:
    if not records:
        raise EmptyRecordSet("no records to tabulate")
    return [_row(r, precision) for r in records]


def emit_error_table(records: Sequence[ApproximationRecord], precision: int = DEFAULT_PRECISION,
                     format: str = "text") -> str:
    """Deterministic table of the records in ``text``, ``json`` or ``csv`` form."""
    fmt = format.lower()
    if fmt not in ("text", "json", "csv"):
        raise UnsupportedFormat(f"unsupported format {format!r}")
    rows = error_rows(records, precision)
    if fmt == "json":
        return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    widths = {c: max(len(c), *(len(r[c]) for r in rows)) for c in COLUMNS}
    lines = ["  ".join(c.ljust(widths[c]) for c in COLUMNS).rstrip()]
    lines.append("  ".join("-" * widths[c] for c in COLUMNS))
    for r in rows:
        lines.append("  ".join(r[c].ljust(widths[c]) for c in COLUMNS).rstrip())
    return "\n".join(lines) + "\n"


def records_from_csv(text: str) -> list[ApproximationRecord]:
    """Read the catalog part of a CSV table back into records."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        expr = row["expression"]
        out.append(ApproximationRecord(
            name=row["name"],
            exact_value=None if expr == "n/a" else parse_scalar(expr),
            reference_kind=ReferenceKind(row["kind"]),
            direction=Direction(row["direction"]),
            attested_in=frozenset(t for t in row["attested"].split(";") if t),
        ))
    return out
