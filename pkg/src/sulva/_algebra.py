"""Normal forms for sums of products of square roots.

A value is held as a polynomial over Q whose monomials are ``(s, atoms)``:

* ``s`` is a square-free positive integer standing for ``sqrt(s)``;
* ``atoms`` is a sorted tuple of ids of *nested* radicals, each the positive
  square root of a registered radicand polynomial that only mentions atoms
  with smaller ids.

Products are reduced with ``sqrt(s)**2 = s`` and ``atom**2 = radicand``.
Over the rational square roots alone the representation is canonical (the
square roots of distinct square-free integers are linearly independent), so
a zero polynomial there is a proof of equality and a nonzero one a proof of
inequality.  With nested atoms a zero polynomial still proves equality, but
a nonzero one proves nothing.

Division goes through conjugate rationalisation.  Anything the reduction
cannot handle raises :class:`NormalizationFailed` and callers fall back to
interval evaluation.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

Monomial = Tuple[int, Tuple[int, ...]]
Poly = Dict[Monomial, Fraction]

ONE: Monomial = (1, ())
MAX_TERMS = 2048


class NormalizationFailed(Exception):
    pass


class _AtomTable:
    """Registry of nested radicals, keyed by their primitive radicand."""

    def __init__(self):
        self._lock = threading.Lock()
        self._by_key: dict = {}
        self.radicands: list = []

    def intern(self, radicand: Poly) -> int:
        key = poly_key(radicand)
        with self._lock:
            atom = self._by_key.get(key)
            if atom is None:
                atom = len(self.radicands)
                self.radicands.append(dict(radicand))
                self._by_key[key] = atom
            return atom

    def radicand(self, atom: int) -> Poly:
        return self.radicands[atom]


ATOMS = _AtomTable()


def poly_key(p: Poly) -> tuple:
    return tuple(sorted(p.items()))


def constant(c) -> Poly:
    c = Fraction(c)
    return {ONE: c} if c else {}


def is_rational(p: Poly) -> bool:
    return all(m == ONE for m in p)


def rational_value(p: Poly) -> Fraction:
    return p.get(ONE, Fraction(0))


def has_nested(p: Poly) -> bool:
    return any(m[1] for m in p)


def _check_size(p: Poly) -> Poly:
    if len(p) > MAX_TERMS:
        raise NormalizationFailed("normal form too large")
    return p


def add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return _check_size(out)


def scale(a: Poly, k) -> Poly:
    k = Fraction(k)
    if not k:
        return {}
    return {m: c * k for m, c in a.items()}


def neg(a: Poly) -> Poly:
    return {m: -c for m, c in a.items()}


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


@lru_cache(maxsize=65536)
def _mono_mul(m1: Monomial, m2: Monomial) -> tuple:
    s1, n1 = m1
    s2, n2 = m2
    g = math.gcd(s1, s2)
    s = (s1 // g) * (s2 // g)
    common = sorted(set(n1) & set(n2))
    rest = tuple(sorted(set(n1) ^ set(n2)))
    result: Poly = {(s, rest): Fraction(g)}
    for atom in reversed(common):
        result = mul(result, ATOMS.radicand(atom))
    return poly_key(result)


def mul(a: Poly, b: Poly) -> Poly:
    if len(a) * len(b) > MAX_TERMS * 8:
        raise NormalizationFailed("product too large")
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            for m, c in _mono_mul(m1, m2):
                v = out.get(m, 0) + c * c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
    return _check_size(out)


def _coprime_base(values) -> list:
    base = sorted({v for v in values if v > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                g = math.gcd(base[i], base[j])
                if g > 1:
                    parts = {g, base[i] // g, base[j] // g}
                    base = sorted((set(base) - {base[i], base[j]}) | {x for x in parts if x > 1})
                    changed = True
                    break
            if changed:
                break
    return base


def inverse(p: Poly) -> Poly:
    if not p:
        raise ZeroDivisionError("inverse of zero")
    if is_rational(p):
        return constant(1 / rational_value(p))
    nested = {a for m in p for a in m[1]}
    if nested:
        top = max(nested)
        conj = {m: (-c if top in m[1] else c) for m, c in p.items()}
    else:
        b = _coprime_base(m[0] for m in p)[0]
        conj = {m: (-c if m[0] % b == 0 else c) for m, c in p.items()}
    prod = mul(p, conj)
    if not prod:
        raise NormalizationFailed("conjugate product vanished")
    return mul(conj, inverse(prod))


def div(a: Poly, b: Poly) -> Poly:
    return mul(a, inverse(b))


# -- square roots -----------------------------------------------------------

def squarefree_split(n: int) -> Tuple[int, int]:
    """Return ``(f, t)`` with ``n == f*f*t`` and ``t`` square-free."""
    if n <= 0:
        raise ValueError("positive integer required")
    f, t = 1, 1
    r = math.isqrt(n)
    if r * r == n:
        return r, 1
    d = 2
    while d * d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            f *= d ** (k // 2)
            if k % 2:
                t *= d
        d += 1 if d == 2 else 2
    # what is left has at most two prime factors
    r = math.isqrt(n)
    if r * r == n:
        f *= r
    else:
        t *= n
    return f, t


def sqrt_rational(c: Fraction) -> Poly:
    c = Fraction(c)
    if c < 0:
        raise ValueError("negative rational under square root")
    if c == 0:
        return {}
    f, t = squarefree_split(c.numerator * c.denominator)
    return {(t, ()): Fraction(f, c.denominator)}


def rational_sqrt_exact(c: Fraction) -> Optional[Fraction]:
    c = Fraction(c)
    if c < 0:
        return None
    p, q = math.isqrt(c.numerator), math.isqrt(c.denominator)
    if p * p == c.numerator and q * q == c.denominator:
        return Fraction(p, q)
    return None


def _content(p: Poly) -> Fraction:
    """Positive rational c such that p / c has coprime integer coefficients."""
    lcm_den = 1
    for c in p.values():
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    g = 0
    for c in p.values():
        g = math.gcd(g, int(c * lcm_den))
    return Fraction(g, lcm_den)


def _denest(p: Poly) -> Optional[Poly]:
    """sqrt(a + b*sqrt(s)) as a sum of two rational square roots, if possible."""
    if len(p) != 2 or ONE not in p:
        return None
    (other,) = [m for m in p if m != ONE]
    if other[1]:
        return None
    s = other[0]
    a, b = p[ONE], p[other]
    r = rational_sqrt_exact(a * a - b * b * s)
    if r is None or a < r:
        return None
    first = sqrt_rational((a + r) / 2)
    second = sqrt_rational((a - r) / 2)
    return add(first, second if b > 0 else neg(second))


def sqrt(p: Poly) -> Poly:
    """Normal form of the non-negative square root of ``p``.

    The caller guarantees that ``p`` is non-negative.
    """
    if not p:
        return {}
    if is_rational(p):
        return sqrt_rational(rational_value(p))
    denested = _denest(p)
    if denested is not None:
        return denested
    c = _content(p)
    primitive = scale(p, 1 / c)
    if len(primitive) == 1 and next(iter(primitive.values())) < 0:
        raise ValueError("negative monomial under square root")
    atom = ATOMS.intern(primitive)
    return mul(sqrt_rational(c), {(1, (atom,)): Fraction(1)})


# -- rendering ----------------------------------------------------------------

def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_string(p: Poly) -> str:
    """Expression text that the scalar parser reads back to the same value."""
    if not p:
        return "0"
    parts = []
    for i, (m, c) in enumerate(sorted(p.items())):
        s, atoms = m
        factors = []
        if s != 1:
            factors.append(f"sqrt({s})")
        for a in atoms:
            factors.append(f"sqrt({to_string(ATOMS.radicand(a))})")
        mag = abs(c)
        if factors:
            body = "*".join(factors)
            if mag != 1:
                if mag.numerator != 1:
                    body = f"{mag.numerator}*{body}"
                if mag.denominator != 1:
                    body = f"{body}/{mag.denominator}"
        else:
            body = _fmt_coef(mag)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
