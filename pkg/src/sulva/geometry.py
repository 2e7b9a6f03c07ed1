"""Points, cords and circles over exact constructible coordinates.

Orientation is fixed once for the whole package: +x is East, +y is North.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (CoincidentObjects, DegenerateCord, DegenerateDirection,
                     DegeneratePolygon, DegenerateSegment, NonpositiveRadius,
                     UndecidedComparison)
from .scalar import ConstructibleScalar, Ordering, ScalarLike, compare, sqrt

S = ConstructibleScalar.coerce

DEFAULT_SLACK = Fraction(3, 4)


def _zero(x: ConstructibleScalar) -> bool:
    """Certified zero test; raises when neither zero nor nonzero is certain."""
    result = compare(x, 0)
    if result is Ordering.UNDECIDED:
        raise UndecidedComparison(f"could not decide whether {x} is zero")
    return result is Ordering.EQUAL


def _sign(x: ConstructibleScalar) -> int:
    result = compare(x, 0)
    if result is Ordering.UNDECIDED:
        raise UndecidedComparison(f"could not decide the sign of {x}")
    return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[result]


@dataclass(frozen=True)
class Point:
    x: ConstructibleScalar
    y: ConstructibleScalar

    def __post_init__(self):
        object.__setattr__(self, "x", S(self.x))
        object.__setattr__(self, "y", S(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k: ScalarLike) -> "Point":
        k = S(k)
        return Point(self.x * k, self.y * k)

    def dot(self, other: "Point") -> ConstructibleScalar:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> ConstructibleScalar:
        return self.x * other.y - self.y * other.x

    def rot90(self) -> "Point":
        """Quarter turn counterclockwise (East becomes North)."""
        return Point(-self.y, self.x)

    def same_as(self, other: "Point") -> bool:
        return _zero(self.x - other.x) and _zero(self.y - other.y)

    def simplify(self) -> "Point":
        return Point(self.x.simplify(), self.y.simplify())

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(x, y)


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def distance_squared(a: Point, b: Point) -> ConstructibleScalar:
    d = b - a
    return d.dot(d)


def distance(a: Point, b: Point) -> ConstructibleScalar:
    d = b - a
    # axis-parallel cords keep simple expressions
    if d.y.is_zero():
        return abs(d.x)
    if d.x.is_zero():
        return abs(d.y)
    return sqrt(d.dot(d))


@dataclass(frozen=True)
class Segment:
    """A stretched cord between two distinct pegs."""

    start: Point
    end: Point

    def __post_init__(self):
        object.__setattr__(self, "start", as_point(self.start))
        object.__setattr__(self, "end", as_point(self.end))
        if self.start.same_as(self.end):
            raise DegenerateSegment("cord endpoints coincide")

    @property
    def direction(self) -> Point:
        return self.end - self.start

    @property
    def length(self) -> ConstructibleScalar:
        return distance(self.start, self.end)

    @property
    def midpoint(self) -> Point:
        return midpoint(self.start, self.end)

    def contains_on_line(self, p: Point) -> bool:
        return _zero((p - self.start).cross(self.direction))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: ConstructibleScalar

    def __post_init__(self):
        object.__setattr__(self, "center", as_point(self.center))
        object.__setattr__(self, "radius", S(self.radius))
        if _sign(self.radius) <= 0:
            raise NonpositiveRadius(f"circle radius {self.radius} is not positive")

    def power(self, p: Point) -> ConstructibleScalar:
        """|p - center|^2 - r^2; zero exactly on the circle."""
        return distance_squared(self.center, p) - self.radius * self.radius

    def contains(self, p: Point) -> bool:
        return _zero(self.power(p))


Shape = Union[Segment, Circle]


def _lex_key_sort(points: list) -> list:
    if len(points) < 2:
        return points
    a, b = points
    first = compare(a.x, b.x)
    if first is Ordering.EQUAL:
        first = compare(a.y, b.y)
    if first is Ordering.UNDECIDED:
        raise UndecidedComparison("intersection points could not be ordered")
    return [b, a] if first is Ordering.GREATER else [a, b]


def _line_circle(p: Point, d: Point, circle: Circle) -> list:
    w = p - circle.center
    dd = d.dot(d)
    wd = w.dot(d)
    disc = wd * wd - dd * (w.dot(w) - circle.radius * circle.radius)
    s = _sign(disc)
    if s < 0:
        return []
    if s == 0:
        return [p + d.scaled(-wd / dd)]
    root = sqrt(disc)
    pts = [p + d.scaled((-wd - root) / dd), p + d.scaled((-wd + root) / dd)]
    return _lex_key_sort(pts)


def _line_line(p1: Point, d1: Point, p2: Point, d2: Point) -> list:
    denom = d1.cross(d2)
    if _zero(denom):
        if _zero((p2 - p1).cross(d1)):
            raise CoincidentObjects("the two lines coincide")
        return []
    t = (p2 - p1).cross(d2) / denom
    return [p1 + d1.scaled(t)]


def _circle_circle(c1: Circle, c2: Circle) -> list:
    delta = c2.center - c1.center
    if _zero(delta.x) and _zero(delta.y):
        if _zero(c1.radius - c2.radius):
            raise CoincidentObjects("the two circles coincide")
        return []
    dd = delta.dot(delta)
    lam = (dd + c1.radius * c1.radius - c2.radius * c2.radius) / (dd * 2)
    foot = c1.center + delta.scaled(lam)
    return _line_circle(foot, delta.rot90(), c1)


def intersect(a: Shape, b: Shape) -> list:
    """Intersection points of two cords' lines and/or circles.

    Returns 0, 1 or 2 points ordered lexicographically by (x, y).
    """
    if isinstance(a, Segment) and isinstance(b, Segment):
        return _line_line(a.start, a.direction, b.start, b.direction)
    if isinstance(a, Segment) and isinstance(b, Circle):
        return _line_circle(a.start, a.direction, b)
    if isinstance(a, Circle) and isinstance(b, Segment):
        return _line_circle(b.start, b.direction, a)
    if isinstance(a, Circle) and isinstance(b, Circle):
        return _circle_circle(a, b)
    raise TypeError(f"cannot intersect {type(a).__name__} with {type(b).__name__}")


def left_of(a: Point, b: Point, p: Point) -> bool:
    """True when p lies strictly left of the directed line a -> b."""
    return _sign((b - a).cross(p - a)) > 0


def cord_stretch_midpoint(a: Point, b: Point, slack: ScalarLike = DEFAULT_SLACK):
    """Pull a cord tied at ``a`` and ``b`` out sideways by its middle.

    Each half of the cord has length ``slack * |ab|``; the two positions of
    the held middle are returned as ``(apex_north, apex_south)`` where
    "north" means left of the directed cord ``a -> b`` (actual north when the
    cord runs west to east).  The apexes always lie on the perpendicular
    bisector of ``ab``.
    """
    a, b = as_point(a), as_point(b)
    slack = S(slack)
    if compare(slack, Fraction(1, 2)) is not Ordering.GREATER:
        raise ValueError("slack factor must exceed 1/2")
    if a.same_as(b):
        raise DegenerateCord("cannot stretch a cord between coincident pegs")
    half = slack * distance(a, b)
    apexes = intersect(Circle(a, half), Circle(b, half))
    first, second = apexes
    if left_of(a, b, first):
        return first, second
    return second, first


def mark_on_line(origin: Point, direction_toward: Point,
                 distance_: ScalarLike) -> Point:
    """Point at exactly ``distance_`` from ``origin`` along the ray to ``direction_toward``."""
    origin, toward = as_point(origin), as_point(direction_toward)
    dist = S(distance_)
    if origin.same_as(toward):
        raise DegenerateDirection("direction point coincides with the origin")
    if _sign(dist) < 0:
        raise ValueError("distance must be non-negative")
    return origin + (toward - origin).scaled(dist / distance(origin, toward))


class AngleCheck(enum.Enum):
    RIGHT = "Right"
    NOT_RIGHT = "NotRight"
    UNDECIDED = "Undecided"


def right_angle_check(vertex: Point, arm1: Point, arm2: Point) -> AngleCheck:
    vertex, arm1, arm2 = as_point(vertex), as_point(arm1), as_point(arm2)
    result = compare((arm1 - vertex).dot(arm2 - vertex), 0)
    if result is Ordering.EQUAL:
        return AngleCheck.RIGHT
    if result is Ordering.UNDECIDED:
        return AngleCheck.UNDECIDED
    return AngleCheck.NOT_RIGHT


def area_of_polygon(vertices: Sequence[Point]) -> ConstructibleScalar:
    """Signed shoelace area, positive for counterclockwise vertex order."""
    pts = [as_point(v) for v in vertices]
    if len(pts) < 3:
        raise DegeneratePolygon("a polygon needs at least three vertices")
    total = S(0)
    for p, q in zip(pts, pts[1:] + pts[:1]):
        total = total + p.cross(q)
    area = total / 2
    if area.is_zero():
        raise DegeneratePolygon("polygon has zero area")
    return area
