"""Body specifications and their exact tube-volume polynomials.

``minkowski_polynomial(spec)`` returns, for a convex body V in R^n, the
polynomial M(t) whose value at t >= 0 is the n-volume of V inflated by a ball
of radius t (coefficients in Q[sqrt(pi)], ascending in t):

* ``Ball(n)``   — unit ball:   omega_n (1 + t)^n;
* ``Cube(n)``   — cube of side 2, [-1, 1]^n:
                  m_k = 2^n C(n, k) (sqrt(pi)/2)^k / Gamma(k/2 + 1);
* ``Adjoint(base, q)`` — the flat cylinder V x {0}^q inside R^(n+q); its
  coefficients are the base ones shifted by q and scaled by
  gamma_multiplier(k, q) = omega_{k+q} / omega_k;
* ``Product(a, b)``    — Cartesian product, via the volume product;
* ``FromMeasures(cm)`` — prescribed cross-sectional measures v_0..v_n,
  m_k = C(n, k) v_{n-k} (so v_0 multiplies t^n and equals omega_n for a
  genuine body, while v_n is the n-volume);
* ``Ellipsoid(n, q, eps)`` — a flattened ellipsoid (semi-axes 1 in n
  directions, eps in q directions).  It has no exact polynomial here and is
  accepted only by the Monte-Carlo layer; asking for its exact polynomial
  raises :class:`~tubepoly.errors.UnsupportedExactError`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PreconditionError, UnsupportedExactError
from .polynomials import ExactPoly, m_product
from .scalars import (
    PiHalfValue,
    as_value,
    gamma_half,
    monomial_ratio,
    sign_and_float,
    unit_ball_volume,
    value_from_json,
    value_to_json,
)


@dataclass(frozen=True)
class CrossMeasures:
    """Cross-sectional measures v_0..v_n of a body in R^n; all must be > 0."""

    n: int
    v: tuple[PiHalfValue, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("ambient dimension must be at least 1")
        vv = tuple(as_value(x) for x in self.v)
        if len(vv) != self.n + 1:
            raise PreconditionError(f"expected {self.n + 1} measures, got {len(vv)}")
        for k, x in enumerate(vv):
            if sign_and_float(x)[0] <= 0:
                raise PreconditionError(f"measure v_{k} must be strictly positive")
        object.__setattr__(self, "v", vv)

    def floats(self) -> list[float]:
        return [sign_and_float(x)[1] for x in self.v]


@dataclass(frozen=True)
class Ball:
    n: int


@dataclass(frozen=True)
class Cube:
    n: int


@dataclass(frozen=True)
class Adjoint:
    base: "BodySpec"
    q: int


@dataclass(frozen=True)
class Product:
    left: "BodySpec"
    right: "BodySpec"


@dataclass(frozen=True)
class FromMeasures:
    measures: CrossMeasures


@dataclass(frozen=True)
class Ellipsoid:
    n: int
    q: int
    eps: Fraction


BodySpec = Union[Ball, Cube, Adjoint, Product, FromMeasures, Ellipsoid]


def ambient_dimension(spec: BodySpec) -> int:
    if isinstance(spec, (Ball, Cube)):
        return spec.n
    if isinstance(spec, Adjoint):
        return ambient_dimension(spec.base) + spec.q
    if isinstance(spec, Product):
        return ambient_dimension(spec.left) + ambient_dimension(spec.right)
    if isinstance(spec, FromMeasures):
        return spec.measures.n
    if isinstance(spec, Ellipsoid):
        return spec.n + spec.q
    raise TypeError(f"not a body spec: {spec!r}")


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"dimension must be a positive integer, got {n!r}")


def gamma_multiplier(k: int, q: int) -> PiHalfValue:
    """omega_{k+q} / omega_k = pi^(q/2) Gamma(k/2+1) / Gamma((k+q)/2+1)."""
    if k < 0 or q < 0:
        raise PreconditionError("gamma_multiplier needs non-negative indices")
    return monomial_ratio(unit_ball_volume(k + q), unit_ball_volume(k))


def ball_polynomial(n: int) -> ExactPoly:
    _check_dim(n)
    w = unit_ball_volume(n)
    return ExactPoly(w * math.comb(n, k) for k in range(n + 1))


def cube_polynomial(n: int) -> ExactPoly:
    _check_dim(n)
    coeffs = []
    for k in range(n + 1):
        base = PiHalfValue.pi_power(k, Fraction(2**n * math.comb(n, k), 2**k))
        coeffs.append(monomial_ratio(base, gamma_half(k + 2)))
    return ExactPoly(coeffs)


def adjoint_lift(m: ExactPoly, q: int) -> ExactPoly:
    """Tube polynomial of V x {0}^q from the tube polynomial of V.

    The coefficient of t^(k+q) is m_k * omega_{k+q} / omega_k; in particular
    the lift of a degree-n polynomial has degree n + q and no terms below t^q.
    """
    if q < 0:
        raise PreconditionError("codimension q must be non-negative")
    if q == 0:
        return m
    out = [PiHalfValue()] * (m.degree + q + 1)
    for k, c in enumerate(m.coeffs):
        if not c.is_zero:
            out[k + q] = c * gamma_multiplier(k, q)
    return ExactPoly(out)


def cartesian_product_polynomial(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Tube polynomial of a Cartesian product: the volume product of the factors."""
    return m_product(a, b)


def measures_to_polynomial(cm: CrossMeasures) -> ExactPoly:
    return ExactPoly(cm.v[cm.n - k] * math.comb(cm.n, k) for k in range(cm.n + 1))


def polynomial_to_measures(m: ExactPoly, n: int) -> CrossMeasures:
    if m.degree != n:
        raise PreconditionError(f"polynomial degree {m.degree} does not match ambient dimension {n}")
    v = [m.coeff(n - j) * Fraction(1, math.comb(n, j)) for j in range(n + 1)]
    return CrossMeasures(n, tuple(v))


def minkowski_polynomial(spec: BodySpec) -> ExactPoly:
    if isinstance(spec, Ball):
        return ball_polynomial(spec.n)
    if isinstance(spec, Cube):
        return cube_polynomial(spec.n)
    if isinstance(spec, Adjoint):
        return adjoint_lift(minkowski_polynomial(spec.base), spec.q)
    if isinstance(spec, Product):
        return cartesian_product_polynomial(
            minkowski_polynomial(spec.left), minkowski_polynomial(spec.right)
        )
    if isinstance(spec, FromMeasures):
        return measures_to_polynomial(spec.measures)
    if isinstance(spec, Ellipsoid):
        raise UnsupportedExactError(
            "flattened ellipsoids have no exact tube polynomial; use the Monte-Carlo layer"
        )
    raise TypeError(f"not a body spec: {spec!r}")


def scale_body_polynomial(m: ExactPoly, lam: Fraction, n: int) -> ExactPoly:
    """Tube polynomial of lam * V from that of V (in R^n): m_k -> lam^(n-k) m_k."""
    if lam <= 0:
        raise PreconditionError("scale factor must be positive")
    if m.degree != n:
        raise PreconditionError("degree must equal the ambient dimension")
    return ExactPoly(m.coeff(k) * lam ** (n - k) for k in range(n + 1))


# -- wire format -----------------------------------------------------------


def body_to_json(spec: BodySpec) -> dict:
    if isinstance(spec, Ball):
        return {"ball": spec.n}
    if isinstance(spec, Cube):
        return {"cube": spec.n}
    if isinstance(spec, Adjoint):
        return {"adjoint": {"base": body_to_json(spec.base), "q": spec.q}}
    if isinstance(spec, Product):
        return {"product": [body_to_json(spec.left), body_to_json(spec.right)]}
    if isinstance(spec, FromMeasures):
        return {
            "measures": {
                "n": spec.measures.n,
                "v": [value_to_json(x) for x in spec.measures.v],
            }
        }
    if isinstance(spec, Ellipsoid):
        return {
            "ellipsoid": {
                "n": spec.n,
                "q": spec.q,
                "eps": f"{spec.eps.numerator}/{spec.eps.denominator}",
            }
        }
    raise TypeError(f"not a body spec: {spec!r}")


def body_from_json(data: dict) -> BodySpec:
    if not isinstance(data, dict) or len(data) != 1:
        raise PreconditionError(f"malformed body spec: {data!r}")
    (kind, payload), = data.items()
    if kind == "ball":
        return Ball(int(payload))
    if kind == "cube":
        return Cube(int(payload))
    if kind == "adjoint":
        return Adjoint(body_from_json(payload["base"]), int(payload["q"]))
    if kind == "product":
        left, right = payload
        return Product(body_from_json(left), body_from_json(right))
    if kind == "measures":
        v = tuple(value_from_json(x) for x in payload["v"])
        return FromMeasures(CrossMeasures(int(payload["n"]), v))
    if kind == "ellipsoid":
        return Ellipsoid(int(payload["n"]), int(payload["q"]), Fraction(str(payload["eps"])))
    raise PreconditionError(f"unknown body kind: {kind!r}")
