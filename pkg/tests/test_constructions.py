from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sulva.constructions import (COARSE_RATIO, FINE_RATIO, FINE_TERMS, CircleSquaringMethod,
                                 PythagoreanTriple, TheoremCheck, augment_unit, circle_from_square,
                                 compass_perpendicular, diagonal_rectangle_theorem_check,
                                 difference_of_squares_side, dronaciti_partition,
                                 east_west_from_shadow, maitrayaniya_radius,
                                 north_south_perpendicular, nyancana_rectangle,
                                 rectangle_to_square, sqrt2_savisesha, sqrt_n_altitude,
                                 square_area_table, square_from_circle, sum_of_squares_side,
                                 triple_catalog)
from sulva.errors import (ArcsDontMeet, CoincidentPoints, InvalidTriple, MethodMismatch,
                          NonpositiveInput, NotAugmentation, NotLarger, NotRealizable,
                          PointOffCircle)
from sulva.geometry import AngleCheck, Point, area_of_polygon, right_angle_check
from sulva.scalar import Ordering, compare, sqrt
from sulva.units import APASTAMBA, BAUDHAYANA, KATYAYANA

pos = st.fractions(min_value=Fraction(1, 20), max_value=40, max_denominator=20)


def eq(a, b) -> bool:
    return compare(a, b) is Ordering.EQUAL


# -- triples ---------------------------------------------------------------------

def test_catalog_and_tags():
    cat = triple_catalog()
    assert [t.as_tuple() for t in cat] == [(3, 4, 5), (5, 12, 13), (8, 15, 17), (12, 35, 37),
                                           (7, 24, 25)]
    k = {t.as_tuple() for t in cat if KATYAYANA in t.attested_in}
    a = {t.as_tuple() for t in cat if APASTAMBA in t.attested_in}
    b = {t.as_tuple() for t in cat if BAUDHAYANA in t.attested_in}
    assert k == {(3, 4, 5), (5, 12, 13)}
    assert a == {(3, 4, 5), (5, 12, 13), (8, 15, 17), (12, 35, 37)}
    assert len(b) == 5
    assert all(t.primitive for t in cat)


def test_invalid_triples():
    with pytest.raises(InvalidTriple):
        PythagoreanTriple(3, 4, 6)
    with pytest.raises(InvalidTriple):
        PythagoreanTriple(0, 1, 1)
    assert not PythagoreanTriple(6, 8, 10).primitive


# -- directions --------------------------------------------------------------------

def test_east_west_orders_west_first():
    seg, tr = east_west_from_shadow((0, 0), 5, (4, 3), (-3, 4))
    assert seg.start == Point(-3, 4) and seg.end == Point(4, 3)
    assert tr.labels["east_west"] == "EW"


def test_east_west_errors():
    with pytest.raises(PointOffCircle):
        east_west_from_shadow((0, 0), 5, (1, 1), (-3, 4))
    with pytest.raises(CoincidentPoints):
        east_west_from_shadow((0, 0), 5, (3, 4), (3, 4))
    with pytest.raises(NonpositiveInput):
        east_west_from_shadow((0, 0), 0, (3, 4), (-3, 4))


@given(st.fractions(min_value=-10, max_value=10, max_denominator=5),
       st.fractions(min_value=-10, max_value=10, max_denominator=5),
       st.fractions(min_value=Fraction(1, 5), max_value=10, max_denominator=5))
def test_north_south_is_perpendicular_bisector(x, y, half):
    ew, _ = east_west_from_shadow((0, 0), 5, (-3, 4), (4, 3)) if x == y else \
        (None, None)
    if ew is None:
        from sulva.geometry import Segment
        ew = Segment(Point(x, y), Point(x + 2 * half, y))
    ns, _ = north_south_perpendicular(ew)
    assert eq(ns.direction.dot(ew.direction), 0)
    mid = ew.midpoint
    assert eq((mid - ns.start).cross(ns.direction), 0)
    # north end lies to the left of west -> east
    assert compare((ew.end - ew.start).cross(ns.end - ew.start), 0) is Ordering.GREATER


def test_parallel_double_perpendicular():
    a, _ = compass_perpendicular((0, 0), (1, 0), 2, 1)
    b, _ = compass_perpendicular((5, 0), (1, 0), 2, 1)
    assert eq(a.direction.cross(b.direction), 0)
    assert eq(a.start.x, 0) and eq(a.end.x, 0)
    assert {str(a.start.y), str(a.end.y)} == {"sqrt(3)", "-sqrt(3)"}
    with pytest.raises(ArcsDontMeet):
        compass_perpendicular((0, 0), (1, 0), 1, 1)


@pytest.mark.parametrize("triple", triple_catalog(), ids=str)
def test_nyancana_corners_right(triple):
    vertices, tr = nyancana_rectangle((1, 2), (3, 4), 2, 5, triple=triple)
    for i in range(4):
        assert right_angle_check(vertices[i], vertices[i - 1], vertices[(i + 1) % 4]) \
            is AngleCheck.RIGHT
    assert eq(area_of_polygon(vertices), 10)


def test_nyancana_axis_aligned():
    vertices, _ = nyancana_rectangle((0, 0), (1, 0), 3, 4)
    assert vertices == [Point(0, 0), Point(4, 0), Point(4, 3), Point(0, 3)]


# -- squares -----------------------------------------------------------------------

@given(pos, pos)
def test_sum_of_squares(a, b):
    side, _ = sum_of_squares_side(a, b)
    assert eq(side * side, a * a + b * b)


@given(pos, pos)
def test_difference_of_squares(a, b):
    if a == b:
        with pytest.raises(NotLarger):
            difference_of_squares_side(a, b)
        return
    big, small = max(a, b), min(a, b)
    side, _ = difference_of_squares_side(big, small)
    assert eq(side * side, big * big - small * small)


@given(pos, pos)
def test_rectangle_to_square(l, w):
    side, _ = rectangle_to_square(l, w)
    assert eq(side * side, l * w)


def test_dvikarani():
    side, _ = sum_of_squares_side(1, 1)
    assert str(side) == "sqrt(2)"


@pytest.mark.parametrize("n", range(1, 51))
def test_sqrt_n_altitude(n):
    alt, tr = sqrt_n_altitude(n)
    assert eq(alt * alt, n)
    assert tr.meta["base"] == str(n - 1)
    assert Fraction(tr.meta["equal_side"]) == Fraction(n + 1, 2)


def test_sqrt_n_rejects_small():
    with pytest.raises(NotRealizable):
        sqrt_n_altitude(0)


@given(pos)
def test_dronaciti(side):
    small, large = dronaciti_partition(side)
    assert eq(small * small, side * side / 10)
    assert eq(large * large, side * side * Fraction(9, 10))
    assert eq(small * small + large * large, side * side)


def test_augment_unit():
    scale, _ = augment_unit(Fraction(15, 2), Fraction(17, 2))
    assert eq(scale * scale, Fraction(17, 15))
    with pytest.raises(NotAugmentation):
        augment_unit(3, 2)


@given(st.fractions(min_value=1, max_value=100, max_denominator=10),
       st.fractions(min_value=Fraction(1, 10), max_value=50, max_denominator=10))
def test_augment_unit_random(a, extra):
    scale, _ = augment_unit(a, a + extra)
    assert eq(scale * scale, (a + extra) / a)


# -- circle rules -----------------------------------------------------------------------

def test_circle_from_square_radius():
    r, tr = circle_from_square(1)
    assert eq(r, (2 + sqrt(2)) / 6)
    assert tr.labels["radius"] == "PR"
    assert eq(tr.labeled("circle").radius, r)


def test_fine_ratio_terms():
    assert FINE_RATIO == Fraction(9785, 11136)
    assert sum(FINE_TERMS) == FINE_RATIO
    assert square_from_circle(1, "fine").as_fraction() == FINE_RATIO
    assert square_from_circle(2, CircleSquaringMethod.COARSE_RATIO).as_fraction() == 2 * COARSE_RATIO


def test_method_mismatch():
    with pytest.raises(MethodMismatch):
        square_from_circle(1, "maitrayaniya")
    with pytest.raises(ValueError):
        CircleSquaringMethod.parse("nonsense")
    assert maitrayaniya_radius(16).as_fraction() == 9


def test_savisesha_value():
    assert sqrt2_savisesha().as_fraction() == Fraction(577, 408)


def test_square_area_table():
    rows = square_area_table(3, [Fraction(1, 2)])
    assert rows == [(1, 1), (2, 4), (3, 9), (Fraction(1, 2), Fraction(1, 4))]
    with pytest.raises(ValueError):
        square_area_table(0)


@given(pos, pos)
def test_diagonal_theorem(l, w):
    assert diagonal_rectangle_theorem_check(l, w) is TheoremCheck.HOLDS
