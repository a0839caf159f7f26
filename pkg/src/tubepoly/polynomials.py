"""Exact polynomials over Q[sqrt(pi)] and the volume-product structure.

``ExactPoly`` stores ascending coefficients (index k multiplies t**k) with
exact :class:`~tubepoly.scalars.PiHalfValue` entries.  On top of ordinary
polynomial arithmetic this module provides:

* ``even_odd_parts`` / ``derivative`` — bookkeeping used by the half-tube and
  stability layers;
* ``jensen_polynomial`` — the degree-n Jensen section of a Taylor coefficient
  sequence, with multipliers j_{n,l} = prod_{i<l} (1 - i/n);
* ``m_product`` — the commutative product under which the tube-volume
  polynomial of a Cartesian product of bodies is the product of the factors'
  polynomials.  On monomials  t^k * t^l  it acts as
  Gamma(k/2+1) Gamma(l/2+1) / Gamma((k+l)/2+1) * t^(k+l).
* ``m_product_integral_check`` — an independent quadrature route to the same
  product, used as a consistency oracle:
  (A * B)(t) = A(t) B(0) + integral_0^t A(sqrt(t^2 - tau^2)) B'(tau) dtau.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

import mpmath
import numpy as np
from scipy.integrate import fixed_quad

from .scalars import (
    ONE,
    ZERO,
    PiHalfValue,
    ValueLike,
    as_value,
    gamma_half,
    monomial_ratio,
    to_mpf,
    value_from_json,
    value_to_json,
)

CoeffLike = Union[PiHalfValue, int, Fraction]


class ExactPoly:
    """Polynomial in t with coefficients in Q[sqrt(pi)]; ascending storage."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[CoeffLike] = ()):
        cs = [as_value(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    @property
    def coeffs(self) -> tuple[PiHalfValue, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> PiHalfValue:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return ZERO

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return ExactPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        if not isinstance(other, ExactPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return ExactPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(-c for c in self._coeffs)

    def __mul__(self, other: "ExactPoly | CoeffLike") -> "ExactPoly":
        if isinstance(other, (PiHalfValue, int, Fraction)):
            s = as_value(other)
            return ExactPoly(c * s for c in self._coeffs)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ExactPoly()
        out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return ExactPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ExactPoly":
        """Multiply by t**k."""
        if k < 0:
            raise ValueError("shift exponent must be non-negative")
        if self.is_zero:
            return self
        return ExactPoly((ZERO,) * k + self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "ExactPoly(0)"
        return "ExactPoly(" + " + ".join(f"({c!r})*t^{k}" for k, c in enumerate(self._coeffs) if c) + ")"

    # -- evaluation --------------------------------------------------------

    def eval_float(self, t: complex | float) -> complex | float:
        """Horner evaluation with float coefficient images (double precision)."""
        acc: complex | float = 0.0
        for c in reversed(self._coeffs):
            acc = acc * t + float(c)
        return acc

    def eval_mpf(self, t, precision_bits: int = 128):
        """Horner evaluation at an mpmath number, exact coefficients."""
        with mpmath.mp.workprec(precision_bits):
            acc = mpmath.mp.mpf(0)
            for c in reversed(self._coeffs):
                acc = acc * t + to_mpf(c, precision_bits)
            return +acc

    # -- wire format -------------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [value_to_json(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "ExactPoly":
        return cls(value_from_json(c) for c in data["coeffs"])


def poly_from_values(*coeffs: CoeffLike) -> ExactPoly:
    return ExactPoly(coeffs)


def even_odd_parts(p: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
    """Split into the even-degree and odd-degree term sums (their sum is p)."""
    even = [c if k % 2 == 0 else ZERO for k, c in enumerate(p.coeffs)]
    odd = [c if k % 2 == 1 else ZERO for k, c in enumerate(p.coeffs)]
    return ExactPoly(even), ExactPoly(odd)


def derivative(p: ExactPoly) -> ExactPoly:
    return ExactPoly(c * k for k, c in enumerate(p.coeffs) if k >= 1)


# -- Jensen sections -------------------------------------------------------


def jensen_multiplier(n: int, l: int) -> Fraction:
    """j_{n,l} = prod_{i=1}^{l-1} (1 - i/n); zero once l exceeds n."""
    if n < 1:
        raise ValueError("Jensen index must be a positive integer")
    if l < 0:
        raise ValueError("coefficient index must be non-negative")
    if l > n:
        return Fraction(0)
    out = Fraction(1)
    for i in range(1, l):
        out *= Fraction(n - i, n)
    return out


def jensen_polynomial(coeffs: Sequence[CoeffLike], n: int) -> ExactPoly:
    """Degree-n Jensen section sum_l j_{n,l} a_l t^l of a coefficient list."""
    top = min(n, len(coeffs) - 1)
    return ExactPoly(as_value(coeffs[l]) * jensen_multiplier(n, l) for l in range(top + 1))


# -- the volume product ----------------------------------------------------


def m_monomial_weight(k: int, l: int) -> PiHalfValue:
    """Gamma(k/2+1) Gamma(l/2+1) / Gamma((k+l)/2+1)."""
    if k < 0 or l < 0:
        raise ValueError("monomial degrees must be non-negative")
    return monomial_ratio(gamma_half(k + 2) * gamma_half(l + 2), gamma_half(k + l + 2))


def m_power_of_t(k: int) -> PiHalfValue:
    """Coefficient of t**k in the k-fold product of t with itself:
    (sqrt(pi)/2)**k / Gamma(k/2 + 1)."""
    num = PiHalfValue.pi_power(k, Fraction(1, 2**k))
    return monomial_ratio(num, gamma_half(k + 2))


def m_product(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """The Gamma-weighted product; bilinear, commutative, associative, unit 1."""
    if a.is_zero or b.is_zero:
        return ExactPoly()
    out = [ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
    for k, ca in enumerate(a.coeffs):
        if ca.is_zero:
            continue
        for l, cb in enumerate(b.coeffs):
            if cb.is_zero:
                continue
            out[k + l] = out[k + l] + ca * cb * m_monomial_weight(k, l)
    return ExactPoly(out)


def m_product_power(a: ExactPoly, n: int) -> ExactPoly:
    """n-fold m_product of a with itself (n >= 0, empty product is 1)."""
    if n < 0:
        raise ValueError("power must be non-negative")
    out = ExactPoly([ONE])
    for _ in range(n):
        out = m_product(out, a)
    return out


def m_product_integral_check(
    a: ExactPoly,
    b: ExactPoly,
    t: float,
    quadrature_points: int = 96,
) -> tuple[float, float]:
    """(algebraic, quadrature) values of (a * b)(t); the caller asserts agreement.

    The quadrature route evaluates
        (a * b)(t) = a(t) b(0) + int_0^t a(sqrt(t^2 - tau^2)) b'(tau) dtau
    with the substitution tau = t sin(theta), which makes the integrand a
    trigonometric polynomial, so fixed-order Gauss-Legendre converges fast.
    """
    if t < 0:
        raise ValueError("evaluation point must be non-negative")
    algebraic = float(m_product(a, b).eval_float(t))
    db = derivative(b)

    def integrand(theta: np.ndarray) -> np.ndarray:
        ct, st = np.cos(theta), np.sin(theta)
        vals = np.empty_like(theta)
        for i in range(theta.size):
            vals[i] = a.eval_float(t * ct[i]) * db.eval_float(t * st[i]) * t * ct[i]
        return vals

    integral, _ = fixed_quad(integrand, 0.0, math.pi / 2, n=quadrature_points)
    quadrature = a.eval_float(t) * float(b.coeff(0)) + float(integral)
    return algebraic, quadrature
