"""Stable string names for every operation the CLI and scripts can call."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional

from . import analysis
from . import constructions as C
from .geometry import Point, Segment, as_point
from .interval import certified_sci
from .scalar import ConstructibleScalar, to_decimal
from .trace import ConstructionTrace

S = ConstructibleScalar.coerce


@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # scalar | rational | int | point | segment | triple | method | text | rationals
    default: Any = None
    required: bool = True


@dataclass
class OpResult:
    """Outcome of a registered operation.

    ``value`` is what a bare reference to the binding yields; ``fields``
    hold named parts reachable as ``binding.field``.
    """

    op: str
    value: Any
    fields: dict = field(default_factory=dict)
    trace: Optional[ConstructionTrace] = None

    def get(self, name: str):
        if name == "value":
            return self.value
        return self.fields[name]


@dataclass(frozen=True)
class Operation:
    name: str
    params: tuple
    run: Callable[..., OpResult]
    summary: str = ""

    def param(self, name: str) -> Optional[Param]:
        for p in self.params:
            if p.name == name:
                return p
        return None


REGISTRY: dict[str, Operation] = {}


def _register(name: str, params, summary: str = ""):
    def deco(fn):
        REGISTRY[name] = Operation(name, tuple(params), fn, summary)
        return fn
    return deco


def _req(name, kind):
    return Param(name, kind)


def _opt(name, kind, default):
    return Param(name, kind, default, required=False)


def _built(op: str, built, field_name: str) -> OpResult:
    value, trace = built
    return OpResult(op, value, {field_name: value}, trace)


@_register("circle-from-square", [_req("side", "scalar")], "radius of the circle equal to a square")
def _circle_from_square(side):
    radius, trace = C.circle_from_square(side)
    return OpResult("circle-from-square", radius, {"radius": radius}, trace)


@_register("square-from-circle", [_req("diameter", "scalar"), _opt("method", "method", "coarse")],
           "side of the square equal to a circle")
def _square_from_circle(diameter, method):
    side = C.square_from_circle(diameter, method)
    return OpResult("square-from-circle", side, {"side": side, "area": side * side})


@_register("maitrayaniya-radius", [_req("side", "scalar")], "radius 9/16 of the side")
def _maitrayaniya(side):
    r = C.maitrayaniya_radius(side)
    return OpResult("maitrayaniya-radius", r, {"radius": r})


@_register("sum-of-squares", [_req("a", "scalar"), _req("b", "scalar")],
           "side of a square equal to two squares")
def _sum(a, b):
    return _built("sum-of-squares", C.sum_of_squares_side(a, b), "side")


@_register("difference-of-squares", [_req("a", "scalar"), _req("b", "scalar")],
           "side of a square equal to the difference of two squares")
def _difference(a, b):
    return _built("difference-of-squares", C.difference_of_squares_side(a, b), "side")


@_register("rectangle-to-square", [_req("length", "scalar"), _req("width", "scalar")],
           "side of a square equal to a rectangle")
def _rect(length, width):
    return _built("rectangle-to-square", C.rectangle_to_square(length, width), "side")


@_register("sqrt-n-altitude", [_req("n", "rational")], "side of a square of n units")
def _altitude(n):
    alt, trace = C.sqrt_n_altitude(n)
    return OpResult("sqrt-n-altitude", alt,
                    {"altitude": alt, "base": S(n - 1), "equal_side": S((n + 1) / 2)}, trace)


@_register("augment-unit", [_req("area_from", "rational"), _req("area_to", "rational")],
           "enlarged unit for a bigger replica")
def _augment(area_from, area_to):
    return _built("augment-unit", C.augment_unit(area_from, area_to), "scale")


@_register("dronaciti-partition", [_req("side", "scalar")], "one-tenth / nine-tenths split")
def _drona(side):
    small, large = C.dronaciti_partition(side)
    return OpResult("dronaciti-partition", small, {"small": small, "large": large})


@_register("sqrt2-savisesha", [], "1 + 1/3 + 1/(3*4) - 1/(3*4*34)")
def _savisesha():
    v = C.sqrt2_savisesha()
    return OpResult("sqrt2-savisesha", v, {"value": v})


@_register("square-area-table", [_opt("max_n", "int", 4), _opt("fractions", "rationals", None)],
           "squares on integer and fractional sides")
def _table(max_n, fractions):
    rows = C.square_area_table(max_n, fractions)
    return OpResult("square-area-table", rows, {})


@_register("diagonal-theorem-check", [_req("length", "scalar"), _req("width", "scalar")],
           "diagonal square equals the two side squares")
def _diag(length, width):
    return OpResult("diagonal-theorem-check", C.diagonal_rectangle_theorem_check(length, width))


@_register("east-west-from-shadow",
           [_opt("pole_base", "point", Point(0, 0)), _req("radius", "scalar"),
            _req("crossing1", "point"), _req("crossing2", "point")],
           "east-west line from two shadow points")
def _east_west(pole_base, radius, crossing1, crossing2):
    seg, trace = C.east_west_from_shadow(pole_base, radius, crossing1, crossing2)
    return OpResult("east-west-from-shadow", seg,
                    {"west": seg.start, "east": seg.end}, trace)


@_register("north-south-perpendicular", [_req("ew", "segment"), _opt("slack", "scalar", Fraction(3, 4))],
           "perpendicular bisector by the stretched rope")
def _north_south(ew, slack):
    seg, trace = C.north_south_perpendicular(ew, slack)
    return OpResult("north-south-perpendicular", seg, {"south": seg.start, "north": seg.end}, trace)


@_register("compass-perpendicular",
           [_req("point", "point"), _opt("direction", "point", Point(1, 0)),
            _req("arc_radius", "scalar"), _req("flank", "scalar")],
           "perpendicular by two arcs")
def _compass(point, direction, arc_radius, flank):
    seg, trace = C.compass_perpendicular(point, direction, arc_radius, flank)
    return OpResult("compass-perpendicular", seg, {"first": seg.start, "second": seg.end}, trace)


@_register("nyancana-rectangle",
           [_opt("origin", "point", Point(0, 0)), _opt("east", "point", Point(1, 0)),
            _req("width", "scalar"), _req("length", "scalar"),
            _opt("triple", "triple", (3, 4, 5)), _opt("cord_scale", "scalar", 1)],
           "rectangle with right angles from a marked cord")
def _nyancana(origin, east, width, length, triple, cord_scale):
    vertices, trace = C.nyancana_rectangle(origin, east, width, length, triple, cord_scale)
    names = ("sw", "se", "ne", "nw")
    return OpResult("nyancana-rectangle", vertices, dict(zip(names, vertices)), trace)


@_register("triple-catalog", [], "the five listed triples")
def _catalog():
    return OpResult("triple-catalog", C.triple_catalog())


@_register("generate-triples", [_opt("limit", "int", 100)], "primitive triples up to a hypotenuse")
def _generate(limit):
    return OpResult("generate-triples", analysis.generate_triples(limit))


@_register("compare-sqrt2", [_req("candidate", "scalar")], "error of a square-root-of-two value")
def _compare_sqrt2(candidate):
    rep = analysis.compare_sqrt2(candidate)
    return OpResult("compare-sqrt2", rep, {
        "agreement_digits": rep.agreement_digits,
        "absolute_error": rep.absolute_error,
        "relative_error": rep.relative_error,
    })


def _catalog_record(name: str) -> analysis.ApproximationRecord:
    for rec in analysis.builtin_catalog() + analysis.comparison_records():
        if rec.name == name:
            return rec
    raise KeyError(f"no catalog record named {name!r}")


@_register("implied-pi", [_req("record", "text")], "value of pi a circle rule amounts to")
def _implied(record):
    iv = analysis.implied_pi(_catalog_record(record))
    return OpResult("implied-pi", iv, {"implied_pi": iv})


@_register("area-error", [_req("record", "text")], "relative area error of a circle rule")
def _area_error(record):
    rep = analysis.area_error(_catalog_record(record))
    return OpResult("area-error", rep, {
        "relative_error": rep.relative_error, "implied_pi": rep.implied_pi,
        "unit_area": rep.unit_area})


def get_operation(name: str) -> Operation:
    return REGISTRY[name]


# -- text rendering of results --------------------------------------------------

def describe_value(value, digits: int = 7) -> str:
    from .analysis import ErrorReport
    from .interval import Interval
    if isinstance(value, ConstructibleScalar):
        text = str(value)
        dec = to_decimal(value, digits)
        return text if text == dec else f"{text} ≈ {dec}"
    if isinstance(value, Interval):
        return value.decimal(digits)
    if isinstance(value, Point):
        return f"({describe_value(value.x, digits)}, {describe_value(value.y, digits)})"
    if isinstance(value, Segment):
        return (f"{describe_value(value.start, digits)} -> {describe_value(value.end, digits)}")
    if isinstance(value, ErrorReport):
        parts = [f"agreement_digits={value.agreement_digits}"]
        if value.absolute_error is not None:
            e = value.absolute_error
            parts.append(f"absolute_error={certified_sci(e.lower, e.upper, 4, sign=True)}")
        rel = value.relative_error
        if value.implied_pi is not None:
            parts.append(f"implied_pi={value.implied_pi.decimal(digits)}")
            parts.append(f"relative_error_pct={(rel * 100).fixed(2, sign=True)}")
        else:
            parts.append(f"relative_error={certified_sci(rel.lower, rel.upper, 4, sign=True)}")
        return ", ".join(parts)
    if isinstance(value, list):
        return "[" + ", ".join(describe_value(v, digits) for v in value) + "]"
    if isinstance(value, tuple):
        return "(" + ", ".join(describe_value(v, digits) for v in value) + ")"
    if isinstance(value, Fraction):
        return str(value)
    if hasattr(value, "value") and hasattr(value, "name") and not isinstance(value, C.PythagoreanTriple):
        return str(value.value)
    return str(value)


def describe(name: str, result: OpResult, digits: int = 7) -> list[str]:
    lines = []
    if result.value is not None:
        lines.append(f"{name} = {describe_value(result.value, digits)}")
    for key, val in result.fields.items():
        if key in ("value",) or val is result.value:
            continue
        lines.append(f"{name}.{key} = {describe_value(val, digits)}")
    return lines
