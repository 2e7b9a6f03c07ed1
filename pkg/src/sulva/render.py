"""SVG 1.1 drawings of construction traces.

Each trace gets its own panel, laid left to right.  Labeled objects (the
results a construction is about) use the ``thick`` class; other cords are
``cord`` and helper circles ``thin``.  North is up: y is flipped when the
coordinates are written.  Coordinates are rounded to a fixed number of
places from exact enclosures, so the same input always yields the same bytes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .errors import EmptyTraceSet
from .geometry import Circle, Point, Segment
from .interval import format_fixed
from .scalar import evaluate, to_decimal
from .trace import ConstructionTrace

DEFAULT_STYLES = {
    "thick": "stroke:#000;stroke-width:3;fill:none",
    "cord": "stroke:#555;stroke-width:1;fill:none",
    "thin": "stroke:#999;stroke-width:0.6;stroke-dasharray:4 3;fill:none",
    "peg": "fill:#000;stroke:none",
    "label": "font-family:sans-serif;font-size:11px;fill:#000",
    "caption": "font-family:sans-serif;font-size:13px;font-weight:bold;fill:#000",
}


@dataclass
class RenderSpec:
    width: int = 480
    height: int = 480
    margin: int = 36
    styles: dict = field(default_factory=lambda: dict(DEFAULT_STYLES))
    labels: bool = True
    precision: int = 7
    places: int = 3  # decimal places for SVG coordinates

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("canvas width and height must be positive")
        if self.precision < 1:
            raise ValueError("label precision must be at least 1")
        if 2 * self.margin >= min(self.width, self.height):
            raise ValueError("margin leaves no room to draw")


def _approx(x, digits: int = 20) -> Fraction:
    return evaluate(x, digits).midpoint


class _Panel:
    """Maps exact plane coordinates into one panel of the canvas."""

    def __init__(self, trace: ConstructionTrace, left: Fraction, width: Fraction,
                 height: Fraction, margin: Fraction):
        xs, ys = [], []
        for obj in trace.objects.values():
            if isinstance(obj, Point):
                xs.append(_approx(obj.x))
                ys.append(_approx(obj.y))
            elif isinstance(obj, Circle):
                cx, cy, r = _approx(obj.center.x), _approx(obj.center.y), _approx(obj.radius)
                xs += [cx - r, cx + r]
                ys += [cy - r, cy + r]
        if not xs:
            xs, ys = [Fraction(0)], [Fraction(0)]
        self.xmin, xmax = min(xs), max(xs)
        ymin, self.ymax = min(ys), max(ys)
        span = max(xmax - self.xmin, self.ymax - ymin, Fraction(1, 10 ** 6))
        self.scale = min(width - 2 * margin, height - 2 * margin) / span
        # centre the drawing in its panel
        self.ox = left + (width - (xmax - self.xmin) * self.scale) / 2
        self.oy = (height - (self.ymax - ymin) * self.scale) / 2

    def xy(self, p: Point) -> tuple:
        x = self.ox + (_approx(p.x) - self.xmin) * self.scale
        y = self.oy + (self.ymax - _approx(p.y)) * self.scale
        return x, y

    def length(self, r) -> Fraction:
        return _approx(r) * self.scale


def render_svg(traces: Sequence[ConstructionTrace], spec: RenderSpec | None = None) -> str:
    """Draw one or more traces into a single SVG document."""
    traces = list(traces)
    if not traces:
        raise EmptyTraceSet("nothing to render")
    spec = spec or RenderSpec()
    n = len(traces)
    panel_w = Fraction(spec.width)
    total_w = spec.width * n
    f = lambda v: format_fixed(v, spec.places)  # noqa: E731

    out = ['<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{total_w}" height="{spec.height}" viewBox="0 0 {total_w} {spec.height}">',
           "<style>"]
    for cls in sorted(spec.styles):
        out.append(f"  .{cls} {{{spec.styles[cls]}}}")
    out.append("</style>")
    out.append(f'<rect x="0" y="0" width="{total_w}" height="{spec.height}" fill="#fff"/>')

    for i, trace in enumerate(traces):
        panel = _Panel(trace, panel_w * i, panel_w, Fraction(spec.height), Fraction(spec.margin))
        labeled = {}
        for semantic, name in trace.labels.items():
            labeled.setdefault(name, semantic)
        out.append(f'<g id="panel-{i}">')
        out.append(f"<title>{escape(trace.title)}</title>")
        if trace.title:
            out.append(f'<text class="caption" x="{f(panel_w * i + 8)}" y="18">'
                       f"{escape(trace.title)}</text>")
        texts = []
        for name, obj in trace.objects.items():
            thick = name in labeled
            if isinstance(obj, Segment):
                (x1, y1), (x2, y2) = panel.xy(obj.start), panel.xy(obj.end)
                cls = "thick" if thick else "cord"
                out.append(f'<line class="{cls}" id="{escape(name)}" x1="{f(x1)}" y1="{f(y1)}" '
                           f'x2="{f(x2)}" y2="{f(y2)}"/>')
                if thick and spec.labels:
                    value = to_decimal(obj.length, spec.precision)
                    texts.append(((x1 + x2) / 2, (y1 + y2) / 2, f"{name} = {value}"))
            elif isinstance(obj, Circle):
                cx, cy = panel.xy(obj.center)
                cls = "thick" if thick else "thin"
                out.append(f'<circle class="{cls}" id="{escape(name)}" cx="{f(cx)}" cy="{f(cy)}" '
                           f'r="{f(panel.length(obj.radius))}"/>')
                if thick and spec.labels:
                    value = to_decimal(obj.radius, spec.precision)
                    texts.append((cx, cy - panel.length(obj.radius), f"r = {value}"))
        for name, obj in trace.objects.items():
            if isinstance(obj, Point):
                x, y = panel.xy(obj)
                out.append(f'<circle class="peg" id="{escape(name)}" cx="{f(x)}" cy="{f(y)}" r="2.5"/>')
                if spec.labels:
                    texts.append((x + 4, y - 4, name))
        for x, y, text in texts:
            out.append(f'<text class="label" x="{f(x)}" y="{f(y)}">{escape(text)}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
