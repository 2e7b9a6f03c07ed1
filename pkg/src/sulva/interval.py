"""Closed intervals with exact rational endpoints and outward rounding.

Endpoints are :class:`fractions.Fraction` values.  The arithmetic helpers take
an optional ``bits`` argument; when it is given, the exact result is rounded
outward to ``bits`` significant binary digits so that endpoint sizes stay
bounded during long evaluations.  Rounding is always away from the enclosed
value, so every result still contains the true one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Number = Union[int, Fraction]


def _log2_floor(x: Fraction) -> int:
    """floor(log2(|x|)) for nonzero x, exactly."""
    n, d = abs(x.numerator), x.denominator
    e = n.bit_length() - d.bit_length()
    # 2**e may overshoot by one binade
    if (d << e if e >= 0 else d) > (n if e >= 0 else n << -e):
        e -= 1
    return e


def _frac(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def round_down(x: Number, bits: Optional[int]) -> Fraction:
    x = _frac(x)
    n, d = x.numerator, x.denominator
    if bits is None or n == 0 or d == 1:
        return x
    shift = bits - _log2_floor(x)
    if shift >= 0:
        return Fraction((n << shift) // d, 1 << shift)
    return Fraction((n // (d << -shift)) << -shift)


def round_up(x: Number, bits: Optional[int]) -> Fraction:
    return -round_down(-_frac(x), bits)


def _sqrt_floor(x: Fraction, bits: int) -> Fraction:
    if x <= 0:
        return Fraction(0)
    k = max(bits - _log2_floor(x) // 2, 0)
    scale = 1 << (2 * k)
    return Fraction(math.isqrt(math.floor(x * scale)), 1 << k)


def _sqrt_ceil(x: Fraction, bits: int) -> Fraction:
    if x <= 0:
        return Fraction(0)
    k = max(bits - _log2_floor(x) // 2, 0)
    scale = 1 << (2 * k)
    n = math.ceil(x * scale)
    r = math.isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << k)


@dataclass(frozen=True)
class Interval:
    """A closed interval ``[lower, upper]`` known to contain some real value.

    ``precision`` records the decimal precision the interval was requested at;
    it is informational and does not take part in arithmetic.
    """

    lower: Fraction
    upper: Fraction
    precision: int = 0

    def __post_init__(self):
        if not isinstance(self.lower, Fraction):
            object.__setattr__(self, "lower", Fraction(self.lower))
        if not isinstance(self.upper, Fraction):
            object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @classmethod
    def point(cls, x: Number, bits: Optional[int] = None) -> "Interval":
        return cls(round_down(x, bits), round_up(x, bits))

    # -- queries ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def magnitude(self) -> Fraction:
        return max(abs(self.lower), abs(self.upper))

    def contains(self, x: Union[Number, "Interval"]) -> bool:
        if isinstance(x, Interval):
            return self.lower <= x.lower and x.upper <= self.upper
        x = Fraction(x)
        return self.lower <= x <= self.upper

    __contains__ = contains

    def contains_zero(self) -> bool:
        return self.lower <= 0 <= self.upper

    def is_disjoint(self, other: "Interval") -> bool:
        return self.upper < other.lower or other.upper < self.lower

    def intersect(self, other: "Interval") -> "Interval":
        lo = max(self.lower, other.lower)
        hi = min(self.upper, other.upper)
        if lo > hi:
            raise ValueError("intervals do not overlap")
        return Interval(lo, hi, max(self.precision, other.precision))

    def with_precision(self, precision: int) -> "Interval":
        return Interval(self.lower, self.upper, precision)

    # -- arithmetic ------------------------------------------------------

    def add(self, other: "Interval", bits: Optional[int] = None) -> "Interval":
        return Interval(round_down(self.lower + other.lower, bits),
                        round_up(self.upper + other.upper, bits))

    def sub(self, other: "Interval", bits: Optional[int] = None) -> "Interval":
        return Interval(round_down(self.lower - other.upper, bits),
                        round_up(self.upper - other.lower, bits))

    def mul(self, other: "Interval", bits: Optional[int] = None) -> "Interval":
        products = (self.lower * other.lower, self.lower * other.upper,
                    self.upper * other.lower, self.upper * other.upper)
        return Interval(round_down(min(products), bits), round_up(max(products), bits))

    def div(self, other: "Interval", bits: Optional[int] = None) -> "Interval":
        if other.contains_zero():
            raise ZeroDivisionError("divisor interval contains zero")
        quotients = (self.lower / other.lower, self.lower / other.upper,
                     self.upper / other.lower, self.upper / other.upper)
        return Interval(round_down(min(quotients), bits), round_up(max(quotients), bits))

    def neg(self) -> "Interval":
        return Interval(-self.upper, -self.lower, self.precision)

    def sqrt(self, bits: int = 64) -> "Interval":
        """Enclosure of the square root.

        Negative parts of the interval are clipped to zero; callers are
        responsible for knowing that the enclosed value is non-negative.
        """
        if self.upper < 0:
            raise ValueError("square root of a negative interval")
        return Interval(_sqrt_floor(self.lower, bits), _sqrt_ceil(self.upper, bits))

    def square(self, bits: Optional[int] = None) -> "Interval":
        if self.lower >= 0:
            return Interval(round_down(self.lower ** 2, bits), round_up(self.upper ** 2, bits))
        if self.upper <= 0:
            return Interval(round_down(self.upper ** 2, bits), round_up(self.lower ** 2, bits))
        return Interval(0, round_up(self.magnitude ** 2, bits))

    def __add__(self, other):
        return self.add(_as_interval(other))

    def __radd__(self, other):
        return _as_interval(other).add(self)

    def __sub__(self, other):
        return self.sub(_as_interval(other))

    def __rsub__(self, other):
        return _as_interval(other).sub(self)

    def __mul__(self, other):
        return self.mul(_as_interval(other))

    def __rmul__(self, other):
        return _as_interval(other).mul(self)

    def __truediv__(self, other):
        return self.div(_as_interval(other))

    def __rtruediv__(self, other):
        return _as_interval(other).div(self)

    def __neg__(self):
        return self.neg()

    def __repr__(self) -> str:
        return f"Interval({format_sig(self.lower, 20)}, {format_sig(self.upper, 20)})"

    # -- decimal output ----------------------------------------------------

    def decimal(self, digits: int) -> str:
        """Round-to-nearest rendering with at most ``digits`` significant digits.

        Digits are dropped until rounding either endpoint gives the same
        string, so no printed digit is uncertain.
        """
        return certified_sig(self.lower, self.upper, digits)

    def fixed(self, places: int, sign: bool = False) -> str:
        return certified_fixed(self.lower, self.upper, places, sign)


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(Fraction(x))


# -- decimal formatting ------------------------------------------------------

def _log10_floor(x: Fraction) -> int:
    x = abs(x)
    e = len(str(x.numerator)) - len(str(x.denominator))
    while Fraction(10) ** e > x:
        e -= 1
    while Fraction(10) ** (e + 1) <= x:
        e += 1
    return e


def _digits_to_string(negative: bool, digits: str, point: int) -> str:
    """Place a decimal point ``point`` digits from the left of ``digits``."""
    if point <= 0:
        body = "0." + "0" * (-point) + digits
    elif point >= len(digits):
        body = digits + "0" * (point - len(digits))
    else:
        body = digits[:point] + "." + digits[point:]
    return ("-" if negative else "") + body


def format_sig(x: Number, digits: int) -> str:
    """Round ``x`` to ``digits`` significant digits (ties to even)."""
    x = Fraction(x)
    if x == 0:
        return "0"
    e = _log10_floor(x)
    scaled = round(abs(x) * Fraction(10) ** (digits - 1 - e))
    if scaled >= 10 ** digits:
        e += 1
        scaled = round(abs(x) * Fraction(10) ** (digits - 1 - e))
    text = str(scaled)
    if -7 <= e < 21:
        s = _digits_to_string(x < 0, text, e + 1)
        if "." in s:
            s = s.rstrip("0").rstrip(".")
        return s
    mant = text[0] + ("." + text[1:].rstrip("0") if text[1:].rstrip("0") else "")
    return f"{'-' if x < 0 else ''}{mant}e{e:+d}"


def format_fixed(x: Number, places: int, sign: bool = False) -> str:
    """Round ``x`` to ``places`` decimal places (ties to even)."""
    x = Fraction(x)
    scaled = round(abs(x) * 10 ** places)
    text = str(scaled).rjust(places + 1, "0")
    body = text if places == 0 else text[:-places] + "." + text[-places:]
    negative = x < 0
    prefix = "-" if negative else ("+" if sign else "")
    return prefix + body


def certified_sig(lower: Number, upper: Number, digits: int) -> str:
    for n in range(digits, 0, -1):
        a, b = format_sig(lower, n), format_sig(upper, n)
        if a == b:
            return a
    return "?"


def certified_fixed(lower: Number, upper: Number, places: int, sign: bool = False) -> str:
    for n in range(places, -1, -1):
        a, b = format_fixed(lower, n, sign), format_fixed(upper, n, sign)
        if a == b:
            return a
        if a.lstrip("+-") == b.lstrip("+-") and not a.strip("+-0."):
            # enclosure straddles zero and rounds to zero either way
            return format_fixed(0, n, sign)
    return "?"


def format_sci(x: Number, digits: int, sign: bool = False) -> str:
    """Scientific notation with ``digits`` significant digits, e.g. ``+2.124e-06``."""
    x = Fraction(x)
    if x == 0:
        return ("+" if sign else "") + "0"
    e = _log10_floor(x)
    scaled = round(abs(x) * Fraction(10) ** (digits - 1 - e))
    if scaled >= 10 ** digits:
        e += 1
        scaled = round(abs(x) * Fraction(10) ** (digits - 1 - e))
    text = str(scaled)
    mant = text[0] + ("." + text[1:] if len(text) > 1 else "")
    prefix = "-" if x < 0 else ("+" if sign else "")
    return f"{prefix}{mant}e{e:+03d}"


def certified_sci(lower: Number, upper: Number, digits: int, sign: bool = False) -> str:
    for n in range(digits, 0, -1):
        a, b = format_sci(lower, n, sign), format_sci(upper, n, sign)
        if a == b:
            return a
    return "?"
