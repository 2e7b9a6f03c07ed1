"""Cord-and-peg procedures: exact results plus the trace that produces them.

Procedures that lay out a figure return a :class:`Built` pair ``(value,
trace)``; pure number rules return the value alone.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (ArcsDontMeet, CoincidentPoints, ConstructionError, InvalidTriple,
                     MethodMismatch, NonpositiveInput, NotAugmentation, NotLarger,
                     NotRealizable, PointOffCircle)
from .geometry import (AngleCheck, Circle, Point, Segment, as_point, distance, left_of,
                       right_angle_check)
from .scalar import ConstructibleScalar, Ordering, ScalarLike, compare, sqrt
from .trace import ConstructionTrace
from .units import APASTAMBA, BAUDHAYANA, KATYAYANA

S = ConstructibleScalar.coerce


class Built(NamedTuple):
    value: object
    trace: ConstructionTrace


def _positive(name: str, x: ScalarLike) -> ConstructibleScalar:
    x = S(x)
    if compare(x, 0) is not Ordering.GREATER:
        raise NonpositiveInput(f"{name} must be positive, got {x}")
    return x


# -- Pythagorean triples -----------------------------------------------------

@dataclass(frozen=True)
class PythagoreanTriple:
    a: int
    b: int
    c: int
    attested_in: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if not isinstance(v, int) or v <= 0:
                raise InvalidTriple(f"triple entries must be positive integers: {self.as_tuple()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise InvalidTriple(f"{self.as_tuple()} does not satisfy a^2 + b^2 = c^2")
        object.__setattr__(self, "attested_in", frozenset(self.attested_in))

    @property
    def primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c) == 1

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def as_triple(t) -> PythagoreanTriple:
    if isinstance(t, PythagoreanTriple):
        return t
    return PythagoreanTriple(*t)


_BAK = frozenset({BAUDHAYANA, APASTAMBA, KATYAYANA})
_BA = frozenset({BAUDHAYANA, APASTAMBA})


def triple_catalog() -> list[PythagoreanTriple]:
    """The five triples of the Baudhāyana list, tagged by the texts using them."""
    return [
        PythagoreanTriple(3, 4, 5, _BAK),
        PythagoreanTriple(5, 12, 13, _BAK),
        PythagoreanTriple(8, 15, 17, _BA),
        PythagoreanTriple(12, 35, 37, _BA),
        PythagoreanTriple(7, 24, 25, frozenset({BAUDHAYANA})),
    ]


# -- cardinal directions -------------------------------------------------------

def east_west_from_shadow(pole_base, circle_radius: ScalarLike,
                          shadow_crossing_1, shadow_crossing_2) -> Built:
    """East-west line through the two points where the pole's shadow tip meets the circle.

    Returns the chord directed West -> East.
    """
    base = as_point(pole_base)
    r = _positive("circle radius", circle_radius)
    p1, p2 = as_point(shadow_crossing_1), as_point(shadow_crossing_2)
    ring = Circle(base, r)
    for p in (p1, p2):
        if not ring.contains(p):
            raise PointOffCircle(f"shadow point {p} is not on the circle")
    if p1.same_as(p2):
        raise CoincidentPoints("the two shadow points coincide")
    order = compare(p1.x, p2.x)
    if order is Ordering.EQUAL:
        order = compare(p1.y, p2.y)
    west, east = (p1, p2) if order is Ordering.LESS else (p2, p1)

    tr = ConstructionTrace("east-west line from the shadow")
    tr.place("O", base)
    tr.circle("ring", "O", radius=r)
    tr.place("W", west)
    tr.place("E", east)
    chord = tr.cord("EW", "W", "E")
    tr.label("west_point", "W")
    tr.label("east_point", "E")
    tr.label("east_west", "EW")
    return Built(chord, tr)


def north_south_perpendicular(ew: Segment, slack: ScalarLike = Fraction(3, 4)) -> Built:
    """Perpendicular bisector of the east-west cord, by pulling the tied rope out at its middle.

    Returns the segment directed from the southern mark to the northern one.
    """
    slack = S(slack)
    if compare(slack, Fraction(1, 2)) is not Ordering.GREATER:
        raise ValueError("slack factor must exceed 1/2")
    tr = ConstructionTrace("north-south line by the stretched rope")
    tr.place("W", ew.start)
    tr.place("E", ew.end)
    tr.cord("EW", "W", "E")
    half = slack * ew.length
    tr.circle("rope_w", "W", radius=half)
    tr.circle("rope_e", "E", radius=half)
    first, second = tr.intersect(("X1", "X2"), "rope_w", "rope_e")
    north, south = ("X1", "X2") if left_of(ew.start, ew.end, first) else ("X2", "X1")
    ns = tr.cord("NS", south, north)
    tr.label("north_point", north)
    tr.label("south_point", south)
    tr.label("north_south", "NS")
    return Built(ns, tr)


def compass_perpendicular(line_point, line_direction, arc_radius: ScalarLike,
                          flank_distance: ScalarLike) -> Built:
    """Perpendicular at a point of a line, by two arcs from equidistant flanking points."""
    p = as_point(line_point)
    d = as_point(line_direction)
    flank = _positive("flank distance", flank_distance)
    radius = S(arc_radius)
    if compare(radius, flank) is not Ordering.GREATER:
        raise ArcsDontMeet("arc radius must exceed the flank distance")
    tr = ConstructionTrace("perpendicular by intersecting arcs")
    tr.place("P", p)
    tr.place("D", p + d)
    tr.place("D2", p - d)
    tr.mark("F1", "P", "D2", flank)
    tr.mark("F2", "P", "D", flank)
    tr.circle("arc1", "F1", radius=radius)
    tr.circle("arc2", "F2", radius=radius)
    tr.intersect(("Q1", "Q2"), "arc1", "arc2")
    seg = tr.cord("perpendicular", "Q1", "Q2")
    tr.label("perpendicular", "perpendicular")
    return Built(seg, tr)


def _nyancana_right_angle(tr: ConstructionTrace, corner: str, along: str, apex: str,
                          triple: PythagoreanTriple, scale: ConstructibleScalar,
                          left_ref: tuple) -> None:
    """Mark ``apex`` so that corner->apex is perpendicular to corner->along."""
    tr.mark(f"{apex}_foot", corner, along, scale * triple.a)
    tr.circle(f"{apex}_leg", corner, radius=scale * triple.b)
    tr.circle(f"{apex}_hyp", f"{apex}_foot", radius=scale * triple.c)
    pts = tr.intersect((f"{apex}_1", f"{apex}_2"), f"{apex}_leg", f"{apex}_hyp")
    a, b = left_ref
    chosen = f"{apex}_1" if left_of(a, b, pts[0]) else f"{apex}_2"
    tr.label(apex, chosen)


def nyancana_rectangle(origin, east_direction, width: ScalarLike, length: ScalarLike,
                       triple=(3, 4, 5), cord_scale: ScalarLike = 1) -> Built:
    """Rectangle laid out with right angles from a marked cord in triple proportions.

    ``length`` runs along ``east_direction`` and ``width`` to its left
    (north for an eastward direction).  Vertices are returned counterclockwise
    from ``origin``.
    """
    triple = as_triple(triple)
    width = _positive("width", width)
    length = _positive("length", length)
    scale = _positive("cord scale", cord_scale)
    o = as_point(origin)
    e = o + as_point(east_direction)

    tr = ConstructionTrace(f"rectangle by the marked cord {triple}")
    tr.place("O", o)
    tr.place("E", e)
    tr.mark("B", "O", "E", length)
    _nyancana_right_angle(tr, "O", "E", "north_at_O", triple, scale, (o, e))
    tr.mark("D", "O", tr.labels["north_at_O"], width)
    _nyancana_right_angle(tr, "B", "O", "north_at_B", triple, scale, (o, e))
    tr.mark("C", "B", tr.labels["north_at_B"], width)
    for name, a, b in (("OB", "O", "B"), ("BC", "B", "C"), ("CD", "C", "D"), ("DO", "D", "O")):
        tr.cord(name, a, b)
        tr.label(f"side_{name}", name)
    vertices = [tr["O"], tr["B"], tr["C"], tr["D"]]
    for i in range(4):
        prev, here, nxt = vertices[i - 1], vertices[i], vertices[(i + 1) % 4]
        if right_angle_check(here, prev, nxt) is not AngleCheck.RIGHT:
            raise ConstructionError(f"corner {i} of the rectangle is not certified right")
    return Built(vertices, tr)


# -- combining squares ----------------------------------------------------------

def sum_of_squares_side(a: ScalarLike, b: ScalarLike) -> Built:
    """Side of the square equal to two given squares: the diagonal of the a-by-b rectangle."""
    a = _positive("a", a)
    b = _positive("b", b)
    tr = ConstructionTrace("sum of two squares")
    tr.peg("P", 0, 0)
    tr.peg("A", a, 0)
    tr.peg("B", 0, b)
    tr.peg("R", a, b)
    tr.cord("PA", "P", "A")
    tr.cord("PB", "P", "B")
    tr.cord("AR", "A", "R")
    tr.cord("RB", "R", "B")
    diag = tr.cord("AB", "A", "B")
    tr.label("square_side", "AB")
    return Built(diag.length.simplify(), tr)


def _difference_steps(tr: ConstructionTrace, a: ConstructibleScalar, b: ConstructibleScalar,
                      prefix: str = "") -> ConstructibleScalar:
    n = lambda s: prefix + s  # noqa: E731
    tr.peg(n("P"), 0, 0)
    tr.peg(n("A"), a, 0)
    tr.peg(n("C"), a, a)
    tr.peg(n("D"), 0, a)
    for name, u, v in (("PA", "P", "A"), ("AC", "A", "C"), ("CD", "C", "D"), ("DP", "D", "P")):
        tr.cord(n(name), n(u), n(v))
    tr.mark(n("B"), n("P"), n("A"), b)
    tr.mark(n("B2"), n("D"), n("C"), b)
    tr.cord(n("BB2"), n("B"), n("B2"))
    tr.circle(n("arc"), n("P"), through=n("A"))
    tr.intersect((n("X_low"), n("X")), n("BB2"), n("arc"))
    side = tr.cord(n("BX"), n("B"), n("X"))
    tr.label("square_side", n("BX"))
    return side.length.simplify()


def difference_of_squares_side(a: ScalarLike, b: ScalarLike) -> Built:
    """Side of the square equal to the difference of squares on ``a`` > ``b``."""
    a, b = S(a), S(b)
    _positive("b", b)
    if compare(a, b) is not Ordering.GREATER:
        raise NotLarger(f"{a} is not larger than {b}")
    tr = ConstructionTrace("difference of two squares")
    return Built(_difference_steps(tr, a, b), tr)


def rectangle_to_square(length: ScalarLike, width: ScalarLike) -> Built:
    """Square of the rectangle's area, via big square minus small square.

    Half of the overhang is moved to the adjacent side, so the rectangle
    becomes a square on (l+w)/2 less a square on (l-w)/2.
    """
    length = _positive("length", length)
    width = _positive("width", width)
    if compare(length, width) is Ordering.LESS:
        length, width = width, length
    tr = ConstructionTrace("rectangle to square")
    big = (length + width) / 2
    small = (length - width) / 2
    tr.meta["large_square_side"] = str(big)
    tr.meta["small_square_side"] = str(small)
    if small.is_zero():
        tr.peg("P", 0, 0)
        tr.peg("A", length, 0)
        tr.cord("PA", "P", "A")
        tr.label("square_side", "PA")
        return Built(length, tr)
    tr.peg("r_P", 0, 0)
    tr.peg("r_A", length, 0)
    tr.peg("r_C", length, width)
    tr.peg("r_D", 0, width)
    for name, u, v in (("r_PA", "r_P", "r_A"), ("r_AC", "r_A", "r_C"),
                       ("r_CD", "r_C", "r_D"), ("r_DP", "r_D", "r_P")):
        tr.cord(name, u, v)
    side = _difference_steps(tr, big, small, prefix="s_")
    return Built(side, tr)


def sqrt_n_altitude(n) -> Built:
    """Side of a square of n units: altitude of the isosceles triangle on base n-1
    with equal sides (n+1)/2, since ((n+1)/2)^2 - ((n-1)/2)^2 = n."""
    n = Fraction(n)
    if n < 1:
        raise NotRealizable(f"the triangle needs n >= 1, got {n}")
    tr = ConstructionTrace(f"altitude for {n} unit squares")
    half_base = (n - 1) / 2
    side = (n + 1) / 2
    tr.meta["n"] = str(n)
    tr.meta["base"] = str(n - 1)
    tr.meta["equal_side"] = str(side)
    tr.peg("F", 0, 0)
    if n == 1:
        tr.peg("N", 0, 1)
        tr.mark("T", "F", "N", side)
    else:
        tr.peg("B1", -half_base, 0)
        tr.peg("B2", half_base, 0)
        tr.cord("base", "B1", "B2")
        tr.circle("arc1", "B1", radius=side)
        tr.circle("arc2", "B2", radius=side)
        tr.intersect(("T_below", "T"), "arc1", "arc2")
        tr.cord("side1", "B1", "T")
        tr.cord("side2", "B2", "T")
        tr.label("base", "base")
        tr.label("equal_side_1", "side1")
        tr.label("equal_side_2", "side2")
    alt = tr.cord("altitude", "F", "T")
    tr.label("altitude", "altitude")
    return Built(alt.length.simplify(), tr)


def augment_unit(area_from, area_to) -> Built:
    """Scale factor for the unit so a figure of ``area_from`` grows to ``area_to``.

    The new unit is the side of the square combining the old unit square with
    one of the extra fraction, e.g. 7½ -> 8½ needs a square of 2/15.
    """
    area_from, area_to = Fraction(area_from), Fraction(area_to)
    if area_from <= 0 or area_to <= 0:
        raise NonpositiveInput("areas must be positive")
    if area_to <= area_from:
        raise NotAugmentation(f"{area_to} is not larger than {area_from}")
    extra = area_to / area_from - 1
    scale, tr = sum_of_squares_side(1, sqrt(extra))
    tr.title = f"unit augmentation {area_from} -> {area_to}"
    tr.meta["area_ratio"] = str(area_to / area_from)
    tr.meta["extra_square"] = str(extra)
    return Built(scale, tr)


def dronaciti_partition(side: ScalarLike) -> tuple:
    """Split a square into squares of one tenth and nine tenths of its area."""
    side = _positive("side", side)
    area = side * side
    return sqrt(area / 10).simplify(), sqrt(area * Fraction(9, 10)).simplify()


# -- square and circle -------------------------------------------------------------

def circle_from_square(side: ScalarLike) -> Built:
    """Circle of (nearly) the square's area.

    Half the diagonal is swung down onto the east-west midline from the
    centre; the radius is half the side plus a third of the part that sticks
    out beyond the square: side * (2 + sqrt 2) / 6.
    """
    side = _positive("side", side)
    h = side / 2
    tr = ConstructionTrace("circling the square")
    tr.peg("A", -h, -h)
    tr.peg("B", h, -h)
    tr.peg("C", h, h)
    tr.peg("D", -h, h)
    for name, u, v in (("AB", "A", "B"), ("BC", "B", "C"), ("CD", "C", "D"), ("DA", "D", "A")):
        tr.cord(name, u, v)
        tr.label(f"square_{name}", name)
    tr.cord("AC", "A", "C")
    tr.cord("BD", "B", "D")
    tr.intersect("P", "AC", "BD")
    tr.peg("W", -h, 0)
    tr.peg("M", h, 0)
    tr.cord("midriff", "W", "M")
    tr.circle("diagonal_swing", "P", through="C")
    half_diag = distance(tr["P"], tr["C"])
    tr.mark("X", "P", "M", half_diag)
    tr.cord("MX", "M", "X")
    jut = distance(tr["M"], tr["X"])
    tr.mark("R", "M", "X", jut / 3)
    pr = tr.cord("PR", "P", "R")
    tr.circle("circle", "P", through="R")
    tr.label("radius", "PR")
    tr.label("circle", "circle")
    return Built(pr.length.simplify(), tr)


class CircleSquaringMethod(enum.Enum):
    FINE_BAUDHAYANA = "FineBaudhayana"
    COARSE_RATIO = "CoarseRatio"
    MAITRAYANIYA_RADIUS = "MaitrayaniyaRadius"

    @classmethod
    def parse(cls, text) -> "CircleSquaringMethod":
        if isinstance(text, cls):
            return text
        key = str(text).replace("-", "").replace("_", "").lower()
        for m in cls:
            if m.value.lower() == key or m.name.replace("_", "").lower() == key:
                return m
        aliases = {"fine": cls.FINE_BAUDHAYANA, "coarse": cls.COARSE_RATIO,
                   "maitrayaniya": cls.MAITRAYANIYA_RADIUS}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown circle-squaring method {text!r}")


FINE_TERMS = (Fraction(7, 8), Fraction(1, 8 * 29), -Fraction(1, 8 * 29 * 6),
              Fraction(1, 8 * 29 * 6 * 8))
FINE_RATIO = sum(FINE_TERMS, Fraction(0))
COARSE_RATIO = Fraction(13, 15)
MAITRAYANIYA_RATIO = Fraction(9, 16)


def square_from_circle(diameter: ScalarLike,
                       method=CircleSquaringMethod.COARSE_RATIO) -> ConstructibleScalar:
    """Side of the square taken equal in area to the circle of ``diameter``.

    The fine rule's four-term sum is read as a side-to-diameter ratio,
    which is the reading that gives the area 3.088... for unit radius.
    """
    diameter = _positive("diameter", diameter)
    method = CircleSquaringMethod.parse(method)
    if method is CircleSquaringMethod.FINE_BAUDHAYANA:
        return diameter * FINE_RATIO
    if method is CircleSquaringMethod.COARSE_RATIO:
        return diameter * COARSE_RATIO
    raise MethodMismatch("the 9/16 rule turns a square into a circle, not the reverse")


def maitrayaniya_radius(side: ScalarLike) -> ConstructibleScalar:
    """Radius 9/16 of the side, for a circle meant to equal the square."""
    return _positive("side", side) * MAITRAYANIYA_RATIO


# -- numbers -------------------------------------------------------------------------

SAVISESHA_TERMS = (Fraction(1), Fraction(1, 3), Fraction(1, 3 * 4), -Fraction(1, 3 * 4 * 34))


def sqrt2_savisesha() -> ConstructibleScalar:
    """1 + 1/3 + 1/(3*4) - 1/(3*4*34) = 577/408."""
    total = S(0)
    for term in SAVISESHA_TERMS:
        total = total + term
    return total


DEFAULT_FRACTIONS = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))


def square_area_table(max_n: int = 4,
                      fractions: Optional[Iterable] = None) -> list[tuple]:
    """Exact (side, area) pairs for sides 1..max_n and the given fractional sides."""
    if int(max_n) != max_n or max_n < 1:
        raise ValueError("max_n must be a positive integer")
    fracs = DEFAULT_FRACTIONS if fractions is None else tuple(Fraction(f) for f in fractions)
    if any(f <= 0 for f in fracs):
        raise ValueError("fractional sides must be positive")
    rows = [(Fraction(k), Fraction(k * k)) for k in range(1, int(max_n) + 1)]
    rows += [(f, f * f) for f in fracs]
    return rows


class TheoremCheck(enum.Enum):
    HOLDS = "Holds"
    UNDECIDED = "Undecided"


def diagonal_rectangle_theorem_check(length: ScalarLike, width: ScalarLike) -> TheoremCheck:
    """The diagonal's square equals the squares on the two sides together."""
    length = _positive("length", length)
    width = _positive("width", width)
    tr = ConstructionTrace("diagonal of a rectangle")
    tr.peg("P", 0, 0)
    tr.peg("Q", length, width)
    diag = distance(tr["P"], tr["Q"])
    if compare(diag * diag, length * length + width * width) is Ordering.EQUAL:
        return TheoremCheck.HOLDS
    return TheoremCheck.UNDECIDED
