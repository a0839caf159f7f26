"""Exact scalar arithmetic in the ring Q[sqrt(pi)].

A value is a finite sum  sum_m  q_m * pi**(m/2)  with rational q_m and integer
exponents m >= 0, stored sparsely as {m: q_m}.  Because pi is transcendental,
such a sum is zero exactly when every q_m is zero, so equality and zero tests
are purely symbolic.  The *sign* of a nonzero value is decided rigorously by
interval arithmetic at increasing precision (:func:`sign_and_float`); no
floating-point heuristics are involved in any exact predicate.

The half-integer Gamma values and unit-ball volumes that drive everything else
live here as well:

* ``gamma_half(two_x)`` returns Gamma(two_x / 2) for positive ``two_x``; the
  result is rational for even ``two_x`` and a rational multiple of sqrt(pi)
  for odd ``two_x``.
* ``unit_ball_volume(p)`` returns omega_p = pi**(p/2) / Gamma(p/2 + 1).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

import mpmath

RationalLike = Union[int, Fraction]
ValueLike = Union["PiHalfValue", int, Fraction]

_MAX_SIGN_PRECISION = 1 << 20


def _as_fraction(q: RationalLike) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    raise TypeError(f"expected int or Fraction, got {type(q).__name__}")


class PiHalfValue:
    """An element of Q[sqrt(pi)], immutable and hashable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for m, q in items:
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"pi-exponent must be a non-negative integer, got {m!r}")
            q = _as_fraction(q)
            if q:
                acc[m] = acc.get(m, Fraction(0)) + q
        object.__setattr__(self, "_terms", tuple(sorted((m, q) for m, q in acc.items() if q)))

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, q: RationalLike) -> "PiHalfValue":
        return cls(((0, q),))

    @classmethod
    def pi_power(cls, m: int, coeff: RationalLike = 1) -> "PiHalfValue":
        """coeff * pi**(m/2)."""
        return cls(((m, coeff),))

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Sorted ``(m, q_m)`` pairs with q_m != 0."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return all(m == 0 for m, _ in self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def rational_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self._terms[0][1]

    def monomial(self) -> tuple[int, Fraction]:
        """The single ``(exponent, coefficient)`` of a monomial value."""
        if len(self._terms) != 1:
            raise ValueError(f"{self!r} is not a monomial")
        return self._terms[0]

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other: ValueLike) -> "PiHalfValue | None":
        if isinstance(other, PiHalfValue):
            return other
        if isinstance(other, (int, Fraction)):
            return PiHalfValue.from_rational(other)
        return None

    def __add__(self, other: ValueLike) -> "PiHalfValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, q in o._terms:
            acc[m] = acc.get(m, Fraction(0)) + q
        return PiHalfValue(acc)

    __radd__ = __add__

    def __neg__(self) -> "PiHalfValue":
        return PiHalfValue(tuple((m, -q) for m, q in self._terms))

    def __sub__(self, other: ValueLike) -> "PiHalfValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: ValueLike) -> "PiHalfValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: ValueLike) -> "PiHalfValue":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for m1, q1 in self._terms:
            for m2, q2 in o._terms:
                m = m1 + m2
                acc[m] = acc.get(m, Fraction(0)) + q1 * q2
        return PiHalfValue(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PiHalfValue":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiHalfValue.from_rational(other)
        if not isinstance(other, PiHalfValue):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "PiHalfValue(0)"
        bits = []
        for m, q in self._terms:
            if m == 0:
                bits.append(f"{q}")
            elif m % 2 == 0:
                bits.append(f"{q}*pi^{m // 2}" if m > 2 else f"{q}*pi")
            else:
                bits.append(f"{q}*pi^({m}/2)")
        return "PiHalfValue(" + " + ".join(bits) + ")"

    def __float__(self) -> float:
        return sign_and_float(self, 128)[1]


ZERO = PiHalfValue()
ONE = PiHalfValue.from_rational(1)
SQRT_PI = PiHalfValue.pi_power(1)


def as_value(x: ValueLike) -> PiHalfValue:
    if isinstance(x, PiHalfValue):
        return x
    return PiHalfValue.from_rational(x)


# -- Gamma at half-integers and ball volumes ------------------------------


def gamma_half(two_x: int) -> PiHalfValue:
    """Gamma(two_x / 2) for a positive integer ``two_x``.

    Gamma(k) = (k-1)! and Gamma(k + 1/2) = (2k)! / (4**k k!) * sqrt(pi).
    """
    if not isinstance(two_x, int) or two_x <= 0:
        raise ValueError(f"gamma_half needs a positive integer, got {two_x!r}")
    if two_x % 2 == 0:
        return PiHalfValue.from_rational(math.factorial(two_x // 2 - 1))
    k = (two_x - 1) // 2
    coeff = Fraction(math.factorial(2 * k), 4**k * math.factorial(k))
    return PiHalfValue.pi_power(1, coeff)


def unit_ball_volume(p: int) -> PiHalfValue:
    """omega_p = pi**(p/2) / Gamma(p/2 + 1); by convention 1 for p < 0.

    The negative-index convention makes ratio formulas for degenerate
    cylinder factors uniform.
    """
    if p < 0:
        return ONE
    if p % 2 == 0:
        k = p // 2
        return PiHalfValue.pi_power(2 * k, Fraction(1, math.factorial(k)))
    k = (p - 1) // 2
    coeff = Fraction(4 ** (k + 1) * math.factorial(k + 1), math.factorial(2 * k + 2))
    return PiHalfValue.pi_power(2 * k, coeff)


def monomial_ratio(num: PiHalfValue, den: PiHalfValue) -> PiHalfValue:
    """Exact quotient of two monomials, which must stay inside the ring."""
    m1, q1 = num.monomial()
    m2, q2 = den.monomial()
    if m1 < m2:
        raise ValueError(f"quotient pi^({m1 - m2}/2) leaves the ring")
    return PiHalfValue.pi_power(m1 - m2, q1 / q2)


def exact_div(a: PiHalfValue, b: PiHalfValue) -> PiHalfValue:
    """Exact division a / b in Q[sqrt(pi)]; raises unless b divides a.

    Plain long division of polynomials in x = sqrt(pi).  Used by the
    fraction-free determinant elimination, where divisibility is guaranteed.
    """
    if b.is_zero:
        raise ZeroDivisionError("division by zero in Q[sqrt(pi)]")
    if a.is_zero:
        return ZERO
    rem = dict(a.terms)
    mb, qb = b.terms[-1]
    out: dict[int, Fraction] = {}
    while rem:
        ma = max(rem)
        qa = rem[ma]
        if ma < mb:
            raise ValueError("inexact division in Q[sqrt(pi)]")
        m, q = ma - mb, qa / qb
        out[m] = q
        for mt, qt in b.terms:
            k = mt + m
            new = rem.get(k, Fraction(0)) - qt * q
            if new:
                rem[k] = new
            else:
                rem.pop(k, None)
    return PiHalfValue(out)


# -- rigorous sign and floating-point image -------------------------------


def to_mpf(x: PiHalfValue, precision_bits: int = 128) -> mpmath.mpf:
    """Evaluate to an mpmath float at the requested working precision."""
    with mpmath.mp.workprec(precision_bits):
        sp = mpmath.mp.sqrt(mpmath.mp.pi)
        total = mpmath.mp.mpf(0)
        for m, q in x.terms:
            total += mpmath.mp.mpf(q.numerator) / q.denominator * sp**m
        return +total


def sign_and_float(x: ValueLike, precision_bits: int = 256) -> tuple[int, float]:
    """(sign, float image) of a ring element, sign decided rigorously.

    Interval arithmetic at ``precision_bits`` is used first; while the
    enclosure straddles zero the precision doubles.  Termination for nonzero
    input is guaranteed because pi is transcendental, so an exact-zero value
    is detected symbolically and never reaches the loop.
    """
    x = as_value(x)
    if x.is_zero:
        return 0, 0.0
    if precision_bits < 8:
        raise ValueError("precision_bits must be at least 8")
    if x.is_rational:
        q = x.rational_value()
        return (1 if q > 0 else -1), float(q)
    prec = max(64, precision_bits)
    iv = mpmath.iv
    old_prec = iv.prec
    try:
        while True:
            iv.prec = prec
            sp = iv.sqrt(iv.pi)
            total = iv.mpf(0)
            for m, q in x.terms:
                total += iv.mpf(q.numerator) / iv.mpf(q.denominator) * sp**m
            approx = float(mpmath.mpf(total.mid))
            if total.a > 0:
                return 1, approx
            if total.b < 0:
                return -1, approx
            if prec > _MAX_SIGN_PRECISION:  # pragma: no cover - unreachable for ring elements
                raise RuntimeError("sign undecided at maximal precision")
            prec *= 2
    finally:
        iv.prec = old_prec


# -- wire format ----------------------------------------------------------


def value_to_json(x: PiHalfValue) -> list[list[object]]:
    """``[[m, "num/den"], ...]`` sorted by exponent."""
    return [[m, f"{q.numerator}/{q.denominator}"] for m, q in x.terms]


def value_from_json(data: Iterable[Iterable[object]]) -> PiHalfValue:
    terms = []
    for pair in data:
        m, q = pair
        terms.append((int(m), Fraction(str(q))))
    return PiHalfValue(terms)
