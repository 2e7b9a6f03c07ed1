from __future__ import annotations

import json
import math
from fractions import Fraction

import mpmath
import pytest

from sulva.analysis import (COLUMNS, ApproximationRecord, Direction, ReferenceKind,
                            agreement_digits, area_error, builtin_catalog, compare_sqrt2,
                            comparison_records, emit_error_table, error_rows, generate_triples,
                            implied_pi, records_from_csv, reference_pi, reference_sqrt2, report_for)
from sulva.errors import EmptyRecordSet, NotGeometric, UnsupportedFormat
from sulva.scalar import sqrt


def brute_force_triples(limit):
    out = []
    for c in range(1, limit + 1):
        for a in range(1, c):
            b2 = c * c - a * a
            b = math.isqrt(b2)
            if b > a and b * b == b2 and math.gcd(a, b) == 1:
                out.append((a, b, c))
    return sorted(out, key=lambda t: (t[2], t[0]))


def frac_to_mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


@pytest.mark.parametrize("precision", [5, 20, 50, 90])
def test_reference_pi_contains_mpmath(precision):
    iv = reference_pi(precision)
    with mpmath.workdps(precision + 40):
        assert frac_to_mp(iv.lower) <= mpmath.pi <= frac_to_mp(iv.upper)
    assert iv.width < Fraction(1, 10 ** precision)


def test_reference_sqrt2_contains_mpmath():
    iv = reference_sqrt2(40)
    with mpmath.workdps(80):
        assert frac_to_mp(iv.lower) <= mpmath.sqrt(2) <= frac_to_mp(iv.upper)


@pytest.mark.parametrize("limit", [5, 30, 100, 250])
def test_generate_triples_matches_brute_force(limit):
    assert [t.as_tuple() for t in generate_triples(limit)] == brute_force_triples(limit)


def test_generated_triples_carry_tags():
    tagged = {t.as_tuple(): t.attested_in for t in generate_triples(40) if t.attested_in}
    assert set(tagged) == {(3, 4, 5), (5, 12, 13), (8, 15, 17), (12, 35, 37), (7, 24, 25)}


def test_agreement_digits_truncated():
    assert agreement_digits(Fraction(577, 408), sqrt(2), 20) == 5
    assert agreement_digits(Fraction(14142129, 10 ** 7), sqrt(2), 20) == 5
    assert agreement_digits(Fraction(3), sqrt(2), 20) == 0
    assert agreement_digits(Fraction(14142, 10 ** 4), sqrt(2), 20) == 4


def by_name(name):
    return next(r for r in builtin_catalog() + comparison_records() if r.name == name)


def test_implied_pi_values_against_mpmath():
    with mpmath.workdps(60):
        circ = 36 / (2 + mpmath.sqrt(2)) ** 2
        iv = implied_pi(by_name("circling the square"), 40)
        assert frac_to_mp(iv.lower) <= circ <= frac_to_mp(iv.upper)
    # the squaring rules are rational, so their implied pi is exact
    for name, ratio in (("fine squaring", Fraction(9785, 11136)),
                        ("coarse squaring 13/15", Fraction(13, 15))):
        iv = implied_pi(by_name(name), 40)
        assert iv.lower <= 4 * ratio ** 2 <= iv.upper


def test_area_errors_against_mpmath():
    with mpmath.workdps(60):
        expected = {
            "circling the square": mpmath.pi * ((2 + mpmath.sqrt(2)) / 6) ** 2 - 1,
            "radius 9/16 of side": mpmath.pi * (mpmath.mpf(9) / 16) ** 2 - 1,
            "fine squaring": 4 * (mpmath.mpf(9785) / 11136) ** 2 / mpmath.pi - 1,
            "coarse squaring 13/15": 4 * (mpmath.mpf(13) / 15) ** 2 / mpmath.pi - 1,
        }
        for name, ref in expected.items():
            rel = area_error(by_name(name), 30).relative_error
            assert frac_to_mp(rel.lower) <= ref <= frac_to_mp(rel.upper), name


def test_scalar_record_is_not_geometric():
    with pytest.raises(NotGeometric):
        implied_pi(by_name("savisesha sqrt2"))
    with pytest.raises(NotGeometric):
        area_error(by_name("Manava circling"))
    assert report_for(by_name("Manava circling")) is None


def test_compare_sqrt2_sign():
    assert compare_sqrt2(Fraction(577, 408)).absolute_error.lower > 0
    assert compare_sqrt2(Fraction(14142129, 10 ** 7)).absolute_error.upper < 0


def test_nonpositive_record_rejected():
    with pytest.raises(ValueError):
        ApproximationRecord("bad", 0, ReferenceKind.PI, Direction.SCALAR)


def test_table_formats():
    recs = builtin_catalog() + comparison_records()
    text = emit_error_table(recs, 30)
    assert "3.0883118" in text and "1.0172524" in text
    rows = json.loads(emit_error_table(recs, 30, "json"))
    assert [r["name"] for r in rows] == [r.name for r in recs]
    assert set(rows[0]) == set(COLUMNS)
    with pytest.raises(UnsupportedFormat):
        emit_error_table(recs, 30, "xml")
    with pytest.raises(EmptyRecordSet):
        error_rows([])


def test_csv_round_trip():
    recs = builtin_catalog() + comparison_records()
    csv_text = emit_error_table(recs, 30, "csv")
    back = records_from_csv(csv_text)
    assert [r.name for r in back] == [r.name for r in recs]
    for a, b in zip(back, recs):
        assert a.reference_kind is b.reference_kind and a.direction is b.direction
        assert a.attested_in == b.attested_in
        if b.exact_value is None:
            assert a.exact_value is None
        else:
            assert a.exact_value == b.exact_value
    assert emit_error_table(back, 30, "csv") == csv_text
