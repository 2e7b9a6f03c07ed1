"""Exact constructible numbers.

A :class:`ConstructibleScalar` is an immutable expression DAG whose leaves
are rationals and whose inner nodes are ``add``, ``sub``, ``mul``, ``div``
and ``sqrt``.  Two views are kept side by side:

* the DAG itself, evaluated by :func:`evaluate` into certified enclosures;
* a symbolic normal form (see :mod:`sulva._algebra`) used to prove
  identities.  When the normal form turns out to be rational the node is
  collapsed to a rational leaf, so ``sqrt(4)`` *is* ``2``.

Equality is a semi-decision: ``compare`` answers ``EQUAL`` only on a symbolic
proof, ``LESS``/``GREATER`` only when interval enclosures separate, and
``UNDECIDED`` otherwise.

>>> two = sqrt(2)
>>> compare(two * two, 2)
<Ordering.EQUAL: 'Equal'>
>>> to_decimal(two, 12)
'1.41421356237'
"""
from __future__ import annotations

import enum
import functools
import math
import threading
from fractions import Fraction
from typing import Optional, Union

from . import _algebra as alg
from ._expr import BinOp, Call, Neg, Num, parse_expression
from .errors import DivisionByZero, NegativeRadicand, ScriptSyntaxError
from .interval import Interval

DEFAULT_MAX_PRECISION = 100
_BASE_BITS = 64

ScalarLike = Union["ConstructibleScalar", int, Fraction, str]


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    UNDECIDED = "Undecided"


class _Retry(Exception):
    """Working precision too low for this evaluation level."""


_UNSET = object()


class ConstructibleScalar:
    __slots__ = ("op", "args", "value", "_nf", "_levels", "_lock", "__weakref__")

    def __init__(self, op: str, args: tuple = (), value: Optional[Fraction] = None,
                 nf=_UNSET):
        self.op = op
        self.args = args
        self.value = value
        self._nf = nf
        self._levels: dict = {}
        self._lock = threading.Lock()

    # -- construction ------------------------------------------------------

    @classmethod
    def rational(cls, x) -> "ConstructibleScalar":
        x = Fraction(x)
        return cls("rat", (), x, alg.constant(x))

    @classmethod
    def coerce(cls, x: ScalarLike) -> "ConstructibleScalar":
        if isinstance(x, ConstructibleScalar):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot make a constructible scalar from {type(x).__name__}")

    @property
    def normal_form(self) -> Optional[dict]:
        """Symbolic normal form, or ``None`` if normalization gave up."""
        if self._nf is _UNSET:
            try:
                self._nf = _compute_nf(self)
            except alg.NormalizationFailed:
                self._nf = None
        return self._nf

    @property
    def is_rational(self) -> bool:
        return self.op == "rat"

    def as_fraction(self) -> Fraction:
        if self.op != "rat":
            raise ValueError(f"{self} is not rational")
        return self.value

    @property
    def canonical(self) -> bool:
        """True when the normal form decides zero-ness both ways."""
        nf = self.normal_form
        return nf is not None and not alg.has_nested(nf)

    def is_zero(self) -> bool:
        nf = self.normal_form
        return nf is not None and not nf

    def simplify(self) -> "ConstructibleScalar":
        """Rebuild the DAG from the normal form (same value, tidier tree)."""
        nf = self.normal_form
        if nf is None or self.op == "rat":
            return self
        if alg.is_rational(nf):
            return ConstructibleScalar.rational(alg.rational_value(nf))
        rebuilt = parse_scalar(alg.to_string(nf))
        rebuilt._nf = nf
        return rebuilt

    # -- operators ---------------------------------------------------------

    def __add__(self, other):
        return field_op("add", self, other)

    def __radd__(self, other):
        return field_op("add", other, self)

    def __sub__(self, other):
        return field_op("sub", self, other)

    def __rsub__(self, other):
        return field_op("sub", other, self)

    def __mul__(self, other):
        return field_op("mul", self, other)

    def __rmul__(self, other):
        return field_op("mul", other, self)

    def __truediv__(self, other):
        return field_op("div", self, other)

    def __rtruediv__(self, other):
        return field_op("div", other, self)

    def __neg__(self):
        return field_op("sub", 0, self)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = ConstructibleScalar.rational(1)
        for _ in range(n):
            result = result * self
        return result

    def __abs__(self):
        return -self if _certified_sign(self) < 0 else self

    # value comparisons; undecidable orderings raise
    def __eq__(self, other):
        try:
            other = ConstructibleScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return compare(self, other) is Ordering.EQUAL

    def __hash__(self):
        nf = self.normal_form
        if nf is None:
            return id(self)
        return hash(alg.poly_key(nf))

    def _order(self, other) -> Ordering:
        result = compare(self, ConstructibleScalar.coerce(other))
        if result is Ordering.UNDECIDED:
            from .errors import UndecidedComparison
            raise UndecidedComparison(f"cannot order {self} and {other}")
        return result

    def __lt__(self, other):
        return self._order(other) is Ordering.LESS

    def __le__(self, other):
        return self._order(other) is not Ordering.GREATER

    def __gt__(self, other):
        return self._order(other) is Ordering.GREATER

    def __ge__(self, other):
        return self._order(other) is not Ordering.LESS

    # -- text ----------------------------------------------------------------

    def expr(self) -> str:
        """Expression text of the DAG (no sharing)."""
        return _dag_string(self, 0)

    def __str__(self) -> str:
        nf = self.normal_form
        return alg.to_string(nf) if nf is not None else self.expr()

    def __repr__(self) -> str:
        return f"ConstructibleScalar({str(self)!r})"

    def __float__(self) -> float:
        return float(evaluate(self, 20).midpoint)


Scalar = ConstructibleScalar


def _dag_string(x: ConstructibleScalar, parent: int) -> str:
    if x.op == "rat":
        v = x.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if (v.denominator != 1 and parent >= 2) or (v < 0 and parent >= 1):
            return f"({text})"
        return text
    if x.op == "sqrt":
        return f"sqrt({_dag_string(x.args[0], 0)})"
    prec = {"add": 1, "sub": 1, "mul": 2, "div": 2}[x.op]
    sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[x.op]
    left = _dag_string(x.args[0], prec)
    right = _dag_string(x.args[1], prec + 1)
    text = f"{left} {sym} {right}"
    return f"({text})" if prec < parent else text


def _compute_nf(x: ConstructibleScalar):
    a = [arg.normal_form for arg in x.args]
    if any(n is None for n in a):
        raise alg.NormalizationFailed("operand has no normal form")
    if x.op == "add":
        return alg.add(a[0], a[1])
    if x.op == "sub":
        return alg.sub(a[0], a[1])
    if x.op == "mul":
        return alg.mul(a[0], a[1])
    if x.op == "div":
        return alg.div(a[0], a[1])
    if x.op == "sqrt":
        return alg.sqrt(a[0])
    raise AssertionError(x.op)


def _finish(node: ConstructibleScalar) -> ConstructibleScalar:
    nf = node.normal_form
    if nf is not None and alg.is_rational(nf):
        return ConstructibleScalar.rational(alg.rational_value(nf))
    return node


# -- public operations ---------------------------------------------------------

def field_op(op: str, a: ScalarLike, b: ScalarLike) -> ConstructibleScalar:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` exactly."""
    a = ConstructibleScalar.coerce(a)
    b = ConstructibleScalar.coerce(b)
    if op not in ("add", "sub", "mul", "div"):
        raise ValueError(f"unknown field operation {op!r}")
    if a.op == "rat" and b.op == "rat":
        x, y = a.value, b.value
        if op == "div":
            if y == 0:
                raise DivisionByZero("division by zero")
            return ConstructibleScalar.rational(x / y)
        return ConstructibleScalar.rational({"add": x + y, "sub": x - y, "mul": x * y}[op])
    if op == "div":
        if b.is_zero():
            raise DivisionByZero(f"division by {b}, which is zero")
        if not b.canonical and _certified_sign(b, raise_on_undecided=False) == 0:
            raise DivisionByZero(f"divisor {b} could not be separated from zero")
    return _finish(ConstructibleScalar(op, (a, b)))


def add(a, b):
    return field_op("add", a, b)


def sub(a, b):
    return field_op("sub", a, b)


def mul(a, b):
    return field_op("mul", a, b)


def div(a, b):
    return field_op("div", a, b)


def sqrt(a: ScalarLike) -> ConstructibleScalar:
    """Non-negative square root; perfect squares collapse to rationals."""
    a = ConstructibleScalar.coerce(a)
    if a.op == "rat":
        if a.value < 0:
            raise NegativeRadicand(f"square root of negative number {a.value}")
        root = alg.rational_sqrt_exact(a.value)
        if root is not None:
            return ConstructibleScalar.rational(root)
        return ConstructibleScalar("sqrt", (a,))
    if a.is_zero():
        return ConstructibleScalar.rational(0)
    sign = _certified_sign(a, raise_on_undecided=False)
    if sign < 0:
        raise NegativeRadicand(f"square root of negative value {a}")
    if sign == 0:
        raise NegativeRadicand(f"radicand {a} could not be certified non-negative")
    return _finish(ConstructibleScalar("sqrt", (a,)))


# -- interval evaluation ---------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def _sqrt_int(s: int, bits: int) -> Interval:
    return Interval.point(s).sqrt(bits)


@functools.lru_cache(maxsize=4096)
def _atom_interval(atom: int, bits: int) -> Interval:
    return _eval_poly(alg.ATOMS.radicand(atom), bits).sqrt(bits)


def _eval_poly(p, bits: int) -> Interval:
    """Enclosure of a normal-form polynomial from cached root enclosures."""
    total = Interval.point(0)
    for (s, atoms), coef in sorted(p.items()):
        term = Interval.point(coef, bits)
        if s != 1:
            term = term.mul(_sqrt_int(s, bits), bits)
        for a in atoms:
            term = term.mul(_atom_interval(a, bits), bits)
        total = total.add(term, bits)
    return total


def _eval_at(x: ConstructibleScalar, bits: int, memo: dict) -> Interval:
    key = id(x)
    hit = memo.get(key)
    if hit is not None:
        return hit
    nf = x._nf
    if x.op == "rat":
        result = Interval.point(x.value, bits)
    elif nf is not _UNSET and nf is not None and len(nf) <= 8:
        result = _eval_poly(nf, bits)
    elif x.op == "sqrt":
        inner = _eval_at(x.args[0], bits, memo)
        if inner.upper < 0:
            raise _Retry()
        result = inner.sqrt(bits)
    else:
        left = _eval_at(x.args[0], bits, memo)
        right = _eval_at(x.args[1], bits, memo)
        if x.op == "add":
            result = left.add(right, bits)
        elif x.op == "sub":
            result = left.sub(right, bits)
        elif x.op == "mul":
            result = left.mul(right, bits)
        else:
            if right.contains_zero():
                raise _Retry()
            result = left.div(right, bits)
    memo[key] = result
    return result


def _level(x: ConstructibleScalar, k: int) -> Optional[Interval]:
    """Enclosure at working precision level k (``64 * 2**k`` bits), cached."""
    levels = x._levels
    if k in levels:
        return levels[k]
    try:
        result = _eval_at(x, _BASE_BITS << k, {})
    except _Retry:
        result = None
    with x._lock:
        levels[k] = result
    return result


def _target_width(interval: Interval, precision: int) -> Fraction:
    return Fraction(10) ** (1 - precision) * max(Fraction(1), interval.magnitude)


_MAX_LEVEL = 14


def evaluate(a: ScalarLike, precision: int = 50) -> Interval:
    """Certified enclosure of ``a``.

    The result has width at most ``10**(1-precision) * max(1, |a|)``.  It is
    the intersection of enclosures at a fixed ladder of working precisions,
    so asking for more digits never returns a wider interval.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    a = ConstructibleScalar.coerce(a)
    if a.op == "rat":
        point = Interval.point(a.value, None)
        return point.with_precision(precision)
    current: Optional[Interval] = None
    for k in range(_MAX_LEVEL + 1):
        enclosure = _level(a, k)
        if enclosure is None:
            continue
        current = enclosure if current is None else current.intersect(enclosure)
        if current.width <= _target_width(current, precision):
            return current.with_precision(precision)
    if current is None:
        raise ArithmeticError(f"could not evaluate {a}")
    return current.with_precision(precision)


def _grid(interval: Interval, precision: int) -> tuple:
    """Widen outward onto the decimal grid the precision allows.

    ``(lo, hi, e)`` stands for ``[lo * 10**e, hi * 10**e]``.
    """
    e = -precision
    mag = interval.magnitude
    if mag >= 1:
        e += len(str(mag.numerator // mag.denominator)) - 1

    def floor_div(x: Fraction) -> int:
        if e < 0:
            return (x.numerator * 10 ** -e) // x.denominator
        return x.numerator // (x.denominator * 10 ** e)

    lo = floor_div(interval.lower)
    hi = -floor_div(-interval.upper)
    return lo, hi, e


def _grid_order(a: tuple, b: tuple) -> Optional[Ordering]:
    (alo, ahi, ae), (blo, bhi, be) = a, b
    e = min(ae, be)
    alo, ahi = alo * 10 ** (ae - e), ahi * 10 ** (ae - e)
    blo, bhi = blo * 10 ** (be - e), bhi * 10 ** (be - e)
    if ahi < blo:
        return Ordering.LESS
    if bhi < alo:
        return Ordering.GREATER
    return None


def _precision_ladder(max_precision: int):
    p = 15
    while p < max_precision:
        yield p
        p *= 2
    yield max_precision


def compare(a: ScalarLike, b: ScalarLike,
            max_precision: int = DEFAULT_MAX_PRECISION) -> Ordering:
    a = ConstructibleScalar.coerce(a)
    b = ConstructibleScalar.coerce(b)
    if a is b:
        return Ordering.EQUAL
    na, nb = a.normal_form, b.normal_form
    if na is not None and nb is not None:
        try:
            if not alg.sub(na, nb):
                return Ordering.EQUAL
        except alg.NormalizationFailed:
            pass
    for p in _precision_ladder(max_precision):
        decided = _grid_order(_grid(evaluate(a, p), p), _grid(evaluate(b, p), p))
        if decided is not None:
            return decided
    return Ordering.UNDECIDED


def _certified_sign(a: ConstructibleScalar, raise_on_undecided: bool = True,
                    max_precision: int = DEFAULT_MAX_PRECISION) -> int:
    """-1, 0 or +1; 0 means proven zero, or undecided when not raising."""
    result = compare(a, ConstructibleScalar.rational(0), max_precision)
    if result is Ordering.UNDECIDED:
        if raise_on_undecided:
            from .errors import UndecidedComparison
            raise UndecidedComparison(f"sign of {a} could not be certified")
        return 0
    return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[result]


def sign(a: ScalarLike) -> int:
    """Certified sign; raises :class:`UndecidedComparison` when unknown."""
    return _certified_sign(ConstructibleScalar.coerce(a))


# -- decimal output ------------------------------------------------------------------

def to_decimal(a: ScalarLike, digits: int = 7) -> str:
    """``digits`` significant digits, rounded to nearest, every digit certified."""
    a = ConstructibleScalar.coerce(a)
    if a.op == "rat":
        return Interval.point(a.value).decimal(digits)
    p = digits + 5
    text = evaluate(a, p).decimal(digits)
    while len(text.replace("-", "").replace(".", "").lstrip("0")) < digits and p < 4 * digits + 40:
        p *= 2
        text = evaluate(a, p).decimal(digits)
    return text


def certified_floor(a: ScalarLike, scale: int = 1, max_precision: int = 400) -> int:
    """floor(a * scale), refining until the enclosure pins it down."""
    a = ConstructibleScalar.coerce(a)
    if a.op == "rat":
        return math.floor(a.value * scale)
    p = 20
    while True:
        iv = evaluate(a, p)
        lo, hi = math.floor(iv.lower * scale), math.floor(iv.upper * scale)
        if lo == hi:
            return lo
        if p >= max_precision:
            raise ArithmeticError(f"floor of {a} * {scale} not resolved")
        p *= 2


# -- parsing ------------------------------------------------------------------------------

def _from_ast(node) -> ConstructibleScalar:
    if isinstance(node, Num):
        return ConstructibleScalar.rational(node.value)
    if isinstance(node, Neg):
        return -_from_ast(node.operand)
    if isinstance(node, BinOp):
        left, right = _from_ast(node.left), _from_ast(node.right)
        return field_op({"+": "add", "-": "sub", "*": "mul", "/": "div"}[node.op], left, right)
    if isinstance(node, Call) and node.func == "sqrt" and len(node.args) == 1 \
            and node.args[0].name is None:
        return sqrt(_from_ast(node.args[0].value))
    raise ScriptSyntaxError("only numbers, + - * /, parentheses and sqrt() are allowed",
                            node.line, node.column)


def parse_scalar(text: str) -> ConstructibleScalar:
    """Read an exact expression such as ``"1/3 + sqrt(2)/6"``."""
    return _from_ast(parse_expression(text))
