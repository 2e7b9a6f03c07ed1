"""A small line-oriented language for chaining registered operations.

::

    # circling the unit square
    let r = circle-from-square(side: 1)
    let s = square-from-circle(diameter: 2 * r, method: "fine")
    report r, s
    render r

Statements are separated by newlines or semicolons.  Arguments are exact
expressions (integers, ``/``, ``sqrt``), strings, ``point(x, y)``,
``triple(a, b, c)``, ``list(...)``, earlier bindings and their fields
(``r.radius``).  Names, operations and argument counts are checked before
anything runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from ._expr import Attr, BinOp, Call, Name, Neg, Node, Num, Parser, Str, tokenize, unparse
from .constructions import PythagoreanTriple
from .errors import (ArityMismatch, ScriptRuntimeError, ScriptSyntaxError, ScriptTypeError,
                     SulvaError, UnboundName, UnknownOperation)
from .geometry import Point, Segment
from .registry import REGISTRY, OpResult, describe
from .scalar import ConstructibleScalar, sqrt
from .trace import ConstructionTrace

BUILTINS = {"sqrt": 1, "point": 2, "triple": 3, "list": None}
KEYWORDS = ("let", "render", "report")


@dataclass(frozen=True)
class Let:
    name: str
    expr: Node
    line: int = field(compare=False)
    column: int = field(compare=False)


@dataclass(frozen=True)
class Render:
    names: tuple
    line: int = field(compare=False)
    column: int = field(compare=False)


@dataclass(frozen=True)
class Report:
    names: tuple
    line: int = field(compare=False)
    column: int = field(compare=False)


Statement = Union[Let, Render, Report]


@dataclass(frozen=True)
class Script:
    statements: tuple

    @property
    def bindings(self) -> list[Let]:
        return [s for s in self.statements if isinstance(s, Let)]

    @property
    def renders(self) -> list[Render]:
        return [s for s in self.statements if isinstance(s, Render)]

    @property
    def reports(self) -> list[Report]:
        return [s for s in self.statements if isinstance(s, Report)]

    def unparse(self) -> str:
        lines = []
        for st in self.statements:
            if isinstance(st, Let):
                lines.append(f"let {st.name} = {unparse(st.expr)}")
            elif isinstance(st, Render):
                lines.append("render " + ", ".join(st.names))
            else:
                lines.append("report " + ", ".join(st.names))
        return "\n".join(lines) + "\n"


# -- parsing ------------------------------------------------------------------------

class _ScriptParser(Parser):

    def skip_separators(self) -> None:
        while self.at("nl") or self.at("op", ";"):
            self.advance()

    def end_statement(self) -> None:
        if self.at("eof"):
            return
        if not (self.at("nl") or self.at("op", ";")):
            tok = self.current
            raise ScriptSyntaxError(f"expected end of statement, found {tok.text!r}",
                                    tok.line, tok.column)

    def parse_names(self) -> tuple:
        names = [self.expect("name").text]
        while self.at("op", ","):
            self.advance()
            names.append(self.expect("name").text)
        return tuple(names)

    def parse_statement(self) -> Statement:
        tok = self.current
        if tok.kind != "name" or tok.text not in KEYWORDS:
            got = tok.text or tok.kind
            raise ScriptSyntaxError(f"expected 'let', 'render' or 'report', found {got!r}",
                                    tok.line, tok.column)
        self.advance()
        if tok.text == "let":
            name_tok = self.expect("name")
            if name_tok.text in KEYWORDS or name_tok.text in BUILTINS:
                raise ScriptSyntaxError(f"{name_tok.text!r} is reserved",
                                        name_tok.line, name_tok.column)
            self.expect("op", "=")
            return Let(name_tok.text, self.parse_expr(), name_tok.line, name_tok.column)
        names = self.parse_names()
        cls = Render if tok.text == "render" else Report
        return cls(names, tok.line, tok.column)


def _check_call(node: Call) -> None:
    if node.func in BUILTINS:
        want = BUILTINS[node.func]
        if any(a.name for a in node.args):
            raise ArityMismatch(f"{node.func}() takes no keyword arguments", node.line, node.column)
        if want is not None and len(node.args) != want:
            raise ArityMismatch(f"{node.func}() takes {want} arguments, got {len(node.args)}",
                                node.line, node.column)
        return
    op = REGISTRY.get(node.func)
    if op is None:
        raise UnknownOperation(f"unknown operation {node.func!r}", node.line, node.column)
    given = set()
    positional = [a for a in node.args if a.name is None]
    if len(positional) > len(op.params):
        raise ArityMismatch(f"{op.name} takes at most {len(op.params)} arguments, "
                            f"got {len(positional)}", node.line, node.column)
    seen_keyword = False
    for i, arg in enumerate(node.args):
        if arg.name is None:
            if seen_keyword:
                raise ArityMismatch("positional argument after a named one",
                                    node.line, node.column)
            pname = op.params[i].name
        else:
            seen_keyword = True
            if op.param(arg.name) is None:
                raise ArityMismatch(f"{op.name} has no parameter {arg.name!r}",
                                    node.line, node.column)
            pname = arg.name
        if pname in given:
            raise ArityMismatch(f"parameter {pname!r} given twice", node.line, node.column)
        given.add(pname)
    missing = [p.name for p in op.params if p.required and p.name not in given]
    if missing:
        raise ArityMismatch(f"{op.name} is missing {', '.join(missing)}", node.line, node.column)


def _check_expr(node: Node, bound: set) -> None:
    if isinstance(node, Name):
        if node.name not in bound:
            raise UnboundName(f"name {node.name!r} is not bound", node.line, node.column)
    elif isinstance(node, Attr):
        _check_expr(node.target, bound)
    elif isinstance(node, Neg):
        _check_expr(node.operand, bound)
    elif isinstance(node, BinOp):
        _check_expr(node.left, bound)
        _check_expr(node.right, bound)
    elif isinstance(node, Call):
        _check_call(node)
        for arg in node.args:
            _check_expr(arg.value, bound)


def parse_script(source: str) -> Script:
    """Parse and statically check a script."""
    parser = _ScriptParser(tokenize(source))
    statements = []
    parser.skip_separators()
    while not parser.at("eof"):
        statements.append(parser.parse_statement())
        parser.end_statement()
        parser.skip_separators()

    bound: set = set()
    for st in statements:
        if isinstance(st, Let):
            _check_expr(st.expr, bound)
            if st.name in bound:
                raise ScriptSyntaxError(f"name {st.name!r} is already bound", st.line, st.column)
            bound.add(st.name)
        else:
            for name in st.names:
                if name not in bound:
                    raise UnboundName(f"name {name!r} is not bound", st.line, st.column)
    return Script(tuple(statements))


# -- evaluation ----------------------------------------------------------------------

@dataclass
class ScriptResult:
    environment: dict = field(default_factory=dict)
    traces: list = field(default_factory=list)  # (binding name, ConstructionTrace)
    reports: list = field(default_factory=list)  # text lines

    def trace_for(self, name: str) -> Optional[ConstructionTrace]:
        res = self.environment.get(name)
        return res.trace if res is not None else None


def _type_error(node: Node, msg: str):
    return ScriptTypeError(msg, node.line, node.column)


def _as_scalar(value, node: Node) -> ConstructibleScalar:
    if isinstance(value, (ConstructibleScalar, int, Fraction)) and not isinstance(value, bool):
        return ConstructibleScalar.coerce(value)
    raise _type_error(node, f"expected a number, got {type(value).__name__}")


class _Evaluator:

    def __init__(self, env: dict):
        self.env = env

    def value(self, node: Node):
        if isinstance(node, Num):
            return ConstructibleScalar.rational(node.value)
        if isinstance(node, Str):
            return node.value
        if isinstance(node, Name):
            return self.env[node.name].value
        if isinstance(node, Attr):
            return self.attr(node)
        if isinstance(node, Neg):
            return -_as_scalar(self.value(node.operand), node)
        if isinstance(node, BinOp):
            a = _as_scalar(self.value(node.left), node)
            b = _as_scalar(self.value(node.right), node)
            return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__, "/": a.__truediv__}[node.op](b)
        if isinstance(node, Call):
            return self.call(node)
        raise TypeError(node)

    def attr(self, node: Attr):
        if isinstance(node.target, Name):
            res = self.env[node.target.name]
            try:
                return res.get(node.attr)
            except KeyError:
                pass
            base = res.value
        else:
            base = self.value(node.target)
        allowed = {Point: ("x", "y"), Segment: ("start", "end", "length", "midpoint"),
                   PythagoreanTriple: ("a", "b", "c")}
        for kind, names in allowed.items():
            if isinstance(base, kind) and node.attr in names:
                return getattr(base, node.attr)
        raise _type_error(node, f"no field {node.attr!r}")

    def call(self, node: Call):
        if node.func == "sqrt":
            return sqrt(_as_scalar(self.value(node.args[0].value), node))
        if node.func == "point":
            x, y = (_as_scalar(self.value(a.value), node) for a in node.args)
            return Point(x, y)
        if node.func == "triple":
            return tuple(_to_int(_as_scalar(self.value(a.value), node), node) for a in node.args)
        if node.func == "list":
            return [self.value(a.value) for a in node.args]
        return self.run_op(node).value

    def run_op(self, node: Call) -> OpResult:
        op = REGISTRY[node.func]
        kwargs = {}
        for i, arg in enumerate(node.args):
            param = op.params[i] if arg.name is None else op.param(arg.name)
            kwargs[param.name] = _convert(param.kind, self.value(arg.value), arg.value)
        for p in op.params:
            kwargs.setdefault(p.name, p.default)
        return op.run(**kwargs)


def _to_int(x: ConstructibleScalar, node: Node) -> int:
    if x.is_rational and x.as_fraction().denominator == 1:
        return int(x.as_fraction())
    raise _type_error(node, f"expected an integer, got {x}")


def _to_fraction(x: ConstructibleScalar, node: Node) -> Fraction:
    if x.is_rational:
        return x.as_fraction()
    raise _type_error(node, f"expected a rational number, got {x}")


def _convert(kind: str, value, node: Node):
    if kind == "scalar":
        return _as_scalar(value, node)
    if kind == "rational":
        return _to_fraction(_as_scalar(value, node), node)
    if kind == "int":
        return _to_int(_as_scalar(value, node), node)
    if kind in ("method", "text"):
        if not isinstance(value, str):
            raise _type_error(node, "expected a string")
        return value
    if kind == "point":
        if not isinstance(value, Point):
            raise _type_error(node, "expected point(x, y)")
        return value
    if kind == "segment":
        if not isinstance(value, Segment):
            raise _type_error(node, "expected a segment, e.g. a line built earlier")
        return value
    if kind == "triple":
        if isinstance(value, PythagoreanTriple):
            return value
        if isinstance(value, tuple) and len(value) == 3:
            return value
        raise _type_error(node, "expected triple(a, b, c)")
    if kind == "rationals":
        if not isinstance(value, list):
            raise _type_error(node, "expected list(...)")
        return [_to_fraction(_as_scalar(v, node), node) for v in value]
    raise ValueError(f"unknown parameter kind {kind!r}")


def evaluate_binding(expr: Node, env: dict) -> OpResult:
    ev = _Evaluator(env)
    if isinstance(expr, Call) and expr.func in REGISTRY:
        return ev.run_op(expr)
    value = ev.value(expr)
    if isinstance(value, ConstructibleScalar):
        value = value.simplify()
    return OpResult("value", value)


def run_script(script: Union[Script, str], precision: int = 7) -> ScriptResult:
    """Run every binding in order.

    ``precision`` is the number of significant digits in report lines;
    all construction arithmetic is exact.  Construction failures are
    re-raised as :class:`ScriptRuntimeError` naming the binding and line.
    """
    if isinstance(script, str):
        script = parse_script(script)
    if precision < 1:
        raise ValueError("precision must be at least 1")
    out = ScriptResult()
    for st in script.statements:
        if isinstance(st, Let):
            try:
                res = evaluate_binding(st.expr, out.environment)
            except ScriptTypeError:
                raise
            except (SulvaError, ValueError, ArithmeticError, KeyError) as exc:
                msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
                raise ScriptRuntimeError(f"in binding {st.name!r}: {type(exc).__name__}: {msg}",
                                         st.line, st.column, st.name, exc) from exc
            out.environment[st.name] = res
            if res.trace is not None:
                out.traces.append((st.name, res.trace))
        elif isinstance(st, Report):
            for name in st.names:
                out.reports.extend(describe(name, out.environment[name], precision))
    return out
