"""Step-by-step records of peg and cord work.

A :class:`ConstructionTrace` is built by appending primitive steps; each
step names the objects it produces and may only use objects produced
earlier.  Replaying the steps from their serialized form recomputes every
object exactly.

JSON layout::

    {"title": ..., "steps": [{"op", "inputs", "outputs", "params"}, ...],
     "labels": {semantic name: object name}, "meta": {...},
     "decimals": {object name: {...}}}

Coordinates, radii and distances are stored as exact expression strings;
``decimals`` is a human-readable sidecar and is ignored on load.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import TraceError
from .geometry import Circle, Point, Segment, intersect, mark_on_line
from .scalar import ConstructibleScalar, ScalarLike, compare, Ordering, parse_scalar, to_decimal

PLACE_PEG = "PlacePeg"
STRETCH_CORD = "StretchCord"
MARK_DISTANCE = "MarkDistance"
DRAW_CIRCLE = "DrawCircle"
INTERSECT = "IntersectObjects"
PRIMITIVES = (PLACE_PEG, STRETCH_CORD, MARK_DISTANCE, DRAW_CIRCLE, INTERSECT)

Obj = Union[Point, Segment, Circle]


@dataclass(frozen=True)
class Step:
    op: str
    inputs: tuple
    outputs: tuple
    params: tuple = ()  # sorted (key, exact string) pairs

    def param(self, key: str) -> Optional[str]:
        return dict(self.params).get(key)

    def to_dict(self) -> dict:
        return {"op": self.op, "inputs": list(self.inputs), "outputs": list(self.outputs),
                "params": dict(self.params)}


def _text(x: ScalarLike) -> str:
    return str(ConstructibleScalar.coerce(x))


class ConstructionTrace:
    """Append-only log of primitive steps plus semantic labels."""

    def __init__(self, title: str = ""):
        self.title = title
        self.steps: list[Step] = []
        self.objects: dict[str, Obj] = {}
        self.labels: dict[str, str] = {}
        self.meta: dict[str, str] = {}

    # -- building ------------------------------------------------------------

    def _need(self, name: str, kind=None) -> Obj:
        try:
            obj = self.objects[name]
        except KeyError:
            raise TraceError(f"unknown object {name!r}") from None
        if kind is not None and not isinstance(obj, kind):
            raise TraceError(f"object {name!r} is not a {kind.__name__}")
        return obj

    def _add(self, step: Step, produced: list) -> None:
        for name in step.outputs:
            if name in self.objects:
                raise TraceError(f"object name {name!r} already used")
        if len(produced) != len(step.outputs):
            raise TraceError(f"{step.op} produced {len(produced)} objects, "
                             f"expected {len(step.outputs)}")
        self.steps.append(step)
        for name, obj in zip(step.outputs, produced):
            self.objects[name] = obj

    def peg(self, name: str, x: ScalarLike, y: ScalarLike) -> Point:
        p = Point(ConstructibleScalar.coerce(x).simplify(), ConstructibleScalar.coerce(y).simplify())
        self._add(Step(PLACE_PEG, (), (name,), (("x", _text(p.x)), ("y", _text(p.y)))), [p])
        return p

    def place(self, name: str, point: Point) -> Point:
        return self.peg(name, point.x, point.y)

    def cord(self, name: str, a: str, b: str) -> Segment:
        seg = Segment(self._need(a, Point), self._need(b, Point))
        self._add(Step(STRETCH_CORD, (a, b), (name,)), [seg])
        return seg

    def mark(self, name: str, origin: str, toward: str, dist: ScalarLike) -> Point:
        dist = ConstructibleScalar.coerce(dist).simplify()
        p = mark_on_line(self._need(origin, Point), self._need(toward, Point), dist)
        self._add(Step(MARK_DISTANCE, (origin, toward), (name,), (("distance", _text(dist)),)), [p])
        return p

    def circle(self, name: str, center: str, radius: Optional[ScalarLike] = None,
               through: Optional[str] = None) -> Circle:
        c = self._need(center, Point)
        if (radius is None) == (through is None):
            raise TraceError("give exactly one of radius or through")
        if through is not None:
            from .geometry import distance
            circ = Circle(c, distance(c, self._need(through, Point)))
            self._add(Step(DRAW_CIRCLE, (center, through), (name,)), [circ])
        else:
            r = ConstructibleScalar.coerce(radius).simplify()
            circ = Circle(c, r)
            self._add(Step(DRAW_CIRCLE, (center,), (name,), (("radius", _text(r)),)), [circ])
        return circ

    def intersect(self, names, a: str, b: str) -> list:
        """Intersect two objects; ``names`` must match the number of points found."""
        names = (names,) if isinstance(names, str) else tuple(names)
        pts = intersect(self._need(a, (Segment, Circle)), self._need(b, (Segment, Circle)))
        self._add(Step(INTERSECT, (a, b), names), pts)
        return pts

    def label(self, semantic: str, name: str) -> None:
        self._need(name)
        self.labels[semantic] = name

    def __getitem__(self, name: str) -> Obj:
        return self._need(name)

    def labeled(self, semantic: str) -> Obj:
        return self.objects[self.labels[semantic]]

    # -- replay ----------------------------------------------------------------

    @classmethod
    def replay_steps(cls, steps, title: str = "") -> "ConstructionTrace":
        out = cls(title)
        for step in steps:
            if step.op == PLACE_PEG:
                out.peg(step.outputs[0], parse_scalar(step.param("x")), parse_scalar(step.param("y")))
            elif step.op == STRETCH_CORD:
                out.cord(step.outputs[0], *step.inputs)
            elif step.op == MARK_DISTANCE:
                out.mark(step.outputs[0], *step.inputs, parse_scalar(step.param("distance")))
            elif step.op == DRAW_CIRCLE:
                if len(step.inputs) == 2:
                    out.circle(step.outputs[0], step.inputs[0], through=step.inputs[1])
                else:
                    out.circle(step.outputs[0], step.inputs[0],
                               radius=parse_scalar(step.param("radius")))
            elif step.op == INTERSECT:
                out.intersect(step.outputs, *step.inputs)
            else:
                raise TraceError(f"unknown primitive {step.op!r}")
        return out

    def replay(self) -> "ConstructionTrace":
        """Rebuild from the recorded steps alone, keeping labels and meta."""
        out = self.replay_steps(self.steps, self.title)
        out.labels = dict(self.labels)
        out.meta = dict(self.meta)
        return out

    def matches(self, other: "ConstructionTrace") -> bool:
        """Every object of ``self`` has an exactly equal counterpart in ``other``."""
        for name, obj in self.objects.items():
            twin = other.objects.get(name)
            if twin is None or type(twin) is not type(obj):
                return False
            if not _same(obj, twin):
                return False
        return True

    # -- serialization -----------------------------------------------------------

    def to_dict(self, precision: int = 7) -> dict:
        decimals = {}
        for name, obj in self.objects.items():
            decimals[name] = _decimal_view(obj, precision)
        return {
            "title": self.title,
            "steps": [s.to_dict() for s in self.steps],
            "labels": dict(self.labels),
            "meta": dict(self.meta),
            "decimals": decimals,
        }

    def to_json(self, precision: int = 7) -> str:
        return json.dumps(self.to_dict(precision), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, doc: dict) -> "ConstructionTrace":
        steps = []
        for raw in doc["steps"]:
            if raw["op"] not in PRIMITIVES:
                raise TraceError(f"unknown primitive {raw['op']!r}")
            params = tuple(sorted((k, str(v)) for k, v in raw.get("params", {}).items()))
            steps.append(Step(raw["op"], tuple(raw["inputs"]), tuple(raw["outputs"]), params))
        out = cls.replay_steps(steps, doc.get("title", ""))
        for semantic, name in doc.get("labels", {}).items():
            out.label(semantic, name)
        out.meta = dict(doc.get("meta", {}))
        return out

    @classmethod
    def from_json(cls, text: str) -> "ConstructionTrace":
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"<ConstructionTrace {self.title!r}: {len(self.steps)} steps>"


def _same_scalar(a, b) -> bool:
    return compare(a, b) is Ordering.EQUAL


def _same(a: Obj, b: Obj) -> bool:
    if isinstance(a, Point):
        return _same_scalar(a.x, b.x) and _same_scalar(a.y, b.y)
    if isinstance(a, Segment):
        return _same(a.start, b.start) and _same(a.end, b.end)
    return _same(a.center, b.center) and _same_scalar(a.radius, b.radius)


def _decimal_view(obj: Obj, precision: int) -> dict:
    if isinstance(obj, Point):
        return {"x": to_decimal(obj.x, precision), "y": to_decimal(obj.y, precision)}
    if isinstance(obj, Segment):
        return {"length": to_decimal(obj.length, precision)}
    return {"cx": to_decimal(obj.center.x, precision), "cy": to_decimal(obj.center.y, precision),
            "r": to_decimal(obj.radius, precision)}
