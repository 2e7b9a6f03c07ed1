from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sulva.errors import (CoincidentObjects, DegenerateCord, DegenerateDirection,
                          DegeneratePolygon, DegenerateSegment, NonpositiveRadius)
from sulva.geometry import (AngleCheck, Circle, Point, Segment, area_of_polygon,
                            cord_stretch_midpoint, distance, intersect, left_of, mark_on_line,
                            right_angle_check)
from sulva.scalar import Ordering, compare, sqrt

coord = st.fractions(min_value=-20, max_value=20, max_denominator=6)
points = st.builds(Point, coord, coord)


def zero(x) -> bool:
    return compare(x, 0) is Ordering.EQUAL


def on_segment_line(seg: Segment, p: Point) -> bool:
    return zero((p - seg.start).cross(seg.direction))


def _rand_point(rng):
    return Point(Fraction(rng.randint(-12, 12), rng.randint(1, 4)),
                 Fraction(rng.randint(-12, 12), rng.randint(1, 4)))


def _rand_radius(rng):
    r = Fraction(rng.randint(1, 15), rng.randint(1, 3))
    return sqrt(r) if rng.random() < 0.3 else r


def test_five_hundred_random_intersections_satisfy_their_equations():
    rng = random.Random(500)
    counts = {"ll": 0, "lc": 0, "cc": 0}
    done = 0
    while done < 500:
        kind = ("ll", "lc", "cc")[done % 3]
        try:
            if kind == "ll":
                a = Segment(_rand_point(rng), _rand_point(rng))
                b = Segment(_rand_point(rng), _rand_point(rng))
            elif kind == "lc":
                a = Segment(_rand_point(rng), _rand_point(rng))
                b = Circle(_rand_point(rng), _rand_radius(rng))
            else:
                a = Circle(_rand_point(rng), _rand_radius(rng))
                b = Circle(_rand_point(rng), _rand_radius(rng))
            pts = intersect(a, b)
        except (DegenerateSegment, CoincidentObjects):
            continue
        for p in pts:
            for shape in (a, b):
                if isinstance(shape, Segment):
                    assert on_segment_line(shape, p)
                else:
                    assert zero(shape.power(p))
        if len(pts) == 2:
            first = compare(pts[0].x, pts[1].x)
            assert first is Ordering.LESS or (first is Ordering.EQUAL and
                                              compare(pts[0].y, pts[1].y) is Ordering.LESS)
        counts[kind] += 1
        done += 1
    assert sum(counts.values()) == 500


def test_tangent_and_miss():
    c = Circle(Point(0, 0), 1)
    assert len(intersect(Segment(Point(-2, 1), Point(2, 1)), c)) == 1
    assert intersect(Segment(Point(-2, 2), Point(2, 2)), c) == []
    assert intersect(Circle(Point(0, 0), 1), Circle(Point(5, 0), 1)) == []


def test_parallel_and_coincident_lines():
    a = Segment(Point(0, 0), Point(1, 0))
    assert intersect(a, Segment(Point(0, 1), Point(1, 1))) == []
    with pytest.raises(CoincidentObjects):
        intersect(a, Segment(Point(2, 0), Point(3, 0)))
    with pytest.raises(CoincidentObjects):
        intersect(Circle(Point(0, 0), 2), Circle(Point(0, 0), 2))


def test_degenerate_objects():
    with pytest.raises(DegenerateSegment):
        Segment(Point(1, 1), Point(1, 1))
    with pytest.raises(NonpositiveRadius):
        Circle(Point(0, 0), 0)
    with pytest.raises(DegenerateCord):
        cord_stretch_midpoint(Point(0, 0), Point(0, 0))
    with pytest.raises(DegenerateDirection):
        mark_on_line(Point(0, 0), Point(0, 0), 1)
    with pytest.raises(DegeneratePolygon):
        area_of_polygon([Point(0, 0), Point(1, 1), Point(2, 2)])


@given(points, points, st.fractions(min_value=Fraction(11, 20), max_value=3, max_denominator=20))
def test_cord_stretch_apexes_on_bisector(a, b, slack):
    if a.same_as(b):
        return
    north, south = cord_stretch_midpoint(a, b, slack)
    for apex in (north, south):
        assert zero(distance(a, apex) ** 2 - distance(b, apex) ** 2)
        assert zero((apex - a).dot(apex - a) - (slack * distance(a, b)) ** 2)
    assert left_of(a, b, north)
    assert not left_of(a, b, south)


def test_cord_stretch_north_is_up_for_eastward_cord():
    north, south = cord_stretch_midpoint(Point(0, 0), Point(2, 0), Fraction(3, 4))
    assert compare(north.y, 0) is Ordering.GREATER
    assert compare(north.x, 1) is Ordering.EQUAL
    assert compare(north.y, sqrt(5) / 2) is Ordering.EQUAL


@given(points, points, st.fractions(min_value=0, max_value=30, max_denominator=7))
def test_mark_on_line_distance(o, t, d):
    if o.same_as(t):
        return
    p = mark_on_line(o, t, d)
    assert zero(distance(o, p) - d)
    assert zero((p - o).cross(t - o))


def test_right_angle_check():
    assert right_angle_check(Point(0, 0), Point(3, 0), Point(0, 4)) is AngleCheck.RIGHT
    assert right_angle_check(Point(0, 0), Point(3, 0), Point(1, 4)) is AngleCheck.NOT_RIGHT


@given(points, points, points)
def test_polygon_area_orientation(a, b, c):
    cross = (b - a).cross(c - a)
    if zero(cross):
        return
    area = area_of_polygon([a, b, c])
    assert zero(area - cross / 2)
    assert zero(area_of_polygon([a, c, b]) + area)


def test_distance_axis_parallel_is_simple():
    assert str(distance(Point(0, 0), Point(0, -3))) == "3"
    assert str(distance(Point(0, 0), Point(1, 1))) == "sqrt(2)"
