from __future__ import annotations

import json

import pytest

from sulva.constructions import (circle_from_square, nyancana_rectangle, sqrt_n_altitude,
                                 sum_of_squares_side)
from sulva.errors import TraceError
from sulva.geometry import Circle, Point, Segment
from sulva.scalar import Ordering, compare, sqrt
from sulva.trace import DRAW_CIRCLE, INTERSECT, PLACE_PEG, ConstructionTrace

BUILT = [circle_from_square(1), nyancana_rectangle((0, 0), (1, 0), 3, 4),
         sqrt_n_altitude(7), sum_of_squares_side(1, sqrt(3))]


@pytest.mark.parametrize("built", BUILT, ids=lambda b: b.trace.title)
def test_replay_reproduces_every_object(built):
    trace = built.trace
    again = trace.replay()
    assert again.matches(trace) and trace.matches(again)
    assert again.labels == trace.labels


@pytest.mark.parametrize("built", BUILT, ids=lambda b: b.trace.title)
def test_json_round_trip(built):
    trace = built.trace
    doc = json.loads(trace.to_json(9))
    assert set(doc) == {"title", "steps", "labels", "meta", "decimals"}
    back = ConstructionTrace.from_json(trace.to_json(9))
    assert back.matches(trace)
    assert back.to_json(9) == trace.to_json(9)


def test_serialized_coordinates_are_exact_strings():
    _, trace = circle_from_square(1)
    doc = trace.to_dict()
    circle_steps = [s for s in doc["steps"] if s["op"] == DRAW_CIRCLE]
    assert circle_steps
    radius_text = doc["decimals"]["circle"]["r"]
    assert radius_text == "0.5690356"
    assert doc["labels"]["radius"] == "PR"


def test_decimals_sidecar_is_ignored_on_load():
    _, trace = circle_from_square(1)
    doc = trace.to_dict()
    doc["decimals"]["circle"]["r"] = "999"
    back = ConstructionTrace.from_dict(doc)
    assert compare(back["circle"].radius, trace["circle"].radius) is Ordering.EQUAL


def test_builder_rules():
    tr = ConstructionTrace("t")
    tr.peg("A", 0, 0)
    tr.peg("B", 2, 0)
    with pytest.raises(TraceError):
        tr.peg("A", 1, 1)
    with pytest.raises(TraceError):
        tr.cord("AC", "A", "C")
    with pytest.raises(TraceError):
        tr.circle("c", "A")
    tr.circle("ca", "A", radius=2)
    tr.circle("cb", "B", through="A")
    pts = tr.intersect(("P", "Q"), "ca", "cb")
    assert len(pts) == 2
    with pytest.raises(TraceError):
        tr.intersect("only", "ca", "cb")
    assert isinstance(tr["ca"], Circle)
    assert [s.op for s in tr.steps] == [PLACE_PEG, PLACE_PEG, DRAW_CIRCLE, DRAW_CIRCLE, INTERSECT]


def test_unknown_primitive_rejected():
    doc = {"title": "", "steps": [{"op": "Teleport", "inputs": [], "outputs": ["X"], "params": {}}]}
    with pytest.raises(TraceError):
        ConstructionTrace.from_dict(doc)


def test_mark_and_cord():
    tr = ConstructionTrace()
    tr.peg("O", 0, 0)
    tr.peg("E", 5, 0)
    p = tr.mark("M", "O", "E", sqrt(2))
    assert compare(p.x, sqrt(2)) is Ordering.EQUAL
    seg = tr.cord("OM", "O", "M")
    assert isinstance(seg, Segment)
    tr.label("mark", "M")
    assert tr.labeled("mark") == Point(sqrt(2), 0)
