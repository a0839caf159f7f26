"""Weyl-type polynomials derived from tube-volume polynomials.

For a body V in R^(n+1) with tube polynomial M(t), the surface S = boundary(V)
has, for each index p >= 1, a polynomial

    W^p_S(t) = sum_l  k_{2l} t^(2l) / prod_{i=1..l} (p + 2i),

where the coefficients k_{2l} depend only on S (n = dim S):

    k_{2l} = m_{2l+1} * (2l+2)! / (2^(l+1) (l+1)!).

The index p = 1 case is the odd part of M divided by 2t (the classical
half-tube average), and the limit p -> infinity keeps the bare coefficients:
W^inf = sum_l k_{2l} t^(2l) = lim_p W^p(sqrt(p) t).

For flat cylinders V x {0}^q the same construction applies to the lifted
polynomial; ``adjoint_weyl_reduction`` verifies the exact reduction that
trades the codimension q for a shift of the index p:

    even q:  omega_p t^p W^p_{d(V x 0^q)} = omega_{p+q} t^(p+q) W^(p+q)_{dV}
    odd q:   omega_p t^p W^p_{d(V x 0^q)} = omega_{p+q-1} t^(p+q-1)
                                            W^(p+q-1)_{d(V x 0^1)}
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import ConsistencyError, PreconditionError
from .polynomials import ExactPoly, even_odd_parts
from .scalars import PiHalfValue, ZERO, unit_ball_volume, value_to_json

IndexLike = Union[int, float, str, None]


def _normalize_index(p: IndexLike) -> int | None:
    """Return a finite index as int, or None for the infinite index."""
    if p is None:
        return None
    if isinstance(p, str):
        if p.lower() in ("inf", "infinity", "oo"):
            return None
        p = int(p)
    if isinstance(p, float):
        if math.isinf(p):
            return None
        p = int(p)
    if not isinstance(p, int):
        raise PreconditionError(f"bad Weyl index {p!r}")
    if p < 1:
        raise PreconditionError("Weyl index must be >= 1 (or infinite)")
    return p


@dataclass(frozen=True)
class WeylCoefficients:
    """k_0, k_2, ..., k_{2 floor(n/2)} for a surface of dimension n."""

    surface_dim: int
    k: tuple[PiHalfValue, ...]

    def __post_init__(self):
        if self.surface_dim < 0:
            raise PreconditionError("surface dimension must be non-negative")
        if len(self.k) != self.surface_dim // 2 + 1:
            raise PreconditionError(
                f"expected {self.surface_dim // 2 + 1} coefficients for dimension "
                f"{self.surface_dim}, got {len(self.k)}"
            )

    def to_json(self) -> dict:
        return {"surface_dim": self.surface_dim, "k": [value_to_json(x) for x in self.k]}


def halftube_polynomial(m: ExactPoly) -> ExactPoly:
    """(M(t) - M(0)) / t: the one-sided tube-volume rate."""
    if m.is_zero:
        return m
    return ExactPoly(m.coeffs[1:])


def weyl1_from_minkowski(m: ExactPoly) -> ExactPoly:
    """W^1 directly from M: the odd part divided by t.

    Identity route: 2t W^1(t) = M(t) - M(-t); equivalently 2 W^1 is the even
    average W^+(t) + W^+(-t) of the half-tube polynomial.
    """
    _, odd = even_odd_parts(m)
    return ExactPoly(odd.coeffs[1:])


def weyl_coefficient_factor(l: int) -> Fraction:
    """(2l+2)! / (2^(l+1) (l+1)!), the weight taking m_{2l+1} to k_{2l}."""
    if l < 0:
        raise PreconditionError("coefficient index must be non-negative")
    return Fraction(math.factorial(2 * l + 2), 2 ** (l + 1) * math.factorial(l + 1))


def weyl_coefficients(m: ExactPoly, surface_dim: int) -> WeylCoefficients:
    """Extract k_{2l} from the tube polynomial of the bounded (n+1)-body.

    ``m`` must have degree surface_dim + 1; only its odd coefficients enter.
    """
    n = surface_dim
    if n < 0:
        raise PreconditionError("surface dimension must be non-negative")
    if m.degree != n + 1:
        raise PreconditionError(
            f"tube polynomial degree {m.degree} does not match surface dimension {n}"
        )
    ks = []
    for l in range(n // 2 + 1):
        ks.append(m.coeff(2 * l + 1) * weyl_coefficient_factor(l))
    return WeylCoefficients(n, tuple(ks))


def index_weight(p: IndexLike, l: int) -> Fraction:
    """1 / prod_{i=1..l} (p + 2i) for finite p; 1 for the infinite index."""
    pp = _normalize_index(p)
    if l < 0:
        raise PreconditionError("coefficient index must be non-negative")
    if pp is None:
        return Fraction(1)
    den = 1
    for i in range(1, l + 1):
        den *= pp + 2 * i
    return Fraction(1, den)


def weyl_index_p(kc: WeylCoefficients, p: IndexLike) -> ExactPoly:
    """W^p as an exact polynomial in t (even degrees only)."""
    if not kc.k:
        return ExactPoly()
    out = [ZERO] * (2 * (len(kc.k) - 1) + 1)
    for l, k in enumerate(kc.k):
        out[2 * l] = k * index_weight(p, l)
    return ExactPoly(out)


@dataclass(frozen=True)
class ReductionReport:
    p: int
    q: int
    parity: str
    reduced_p: int
    reduced_q: int
    lhs: ExactPoly
    rhs: ExactPoly
    match: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "parity": self.parity,
            "reduced_p": self.reduced_p,
            "reduced_q": self.reduced_q,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "match": self.match,
        }


def _cylinder_weyl(base_m: ExactPoly, q: int, p: int) -> ExactPoly:
    """W^p of the boundary of V x {0}^q given M_V (q = 0 means dV itself)."""
    from .bodies import adjoint_lift

    lifted = adjoint_lift(base_m, q)
    return weyl_index_p(weyl_coefficients(lifted, lifted.degree - 1), p)


def adjoint_weyl_reduction(base_m: ExactPoly, p: IndexLike, q: int) -> ReductionReport:
    """Verify (exactly) the codimension-for-index trade and return both sides.

    A mismatch raises :class:`ConsistencyError`; the report carries the two
    polynomials omega_p t^p W^p (left) and its reduced form (right).
    """
    pp = _normalize_index(p)
    if pp is None:
        raise PreconditionError("the reduction identity needs a finite index")
    if q < 1:
        raise PreconditionError("codimension q must be >= 1")
    if base_m.degree < 1:
        raise PreconditionError("base tube polynomial must have positive degree")

    lhs = (unit_ball_volume(pp) * _cylinder_weyl(base_m, q, pp)).shift(pp)
    if q % 2 == 0:
        reduced_p, reduced_q, parity = pp + q, 0, "even"
    else:
        reduced_p, reduced_q, parity = pp + q - 1, 1, "odd"
    rhs = (unit_ball_volume(reduced_p) * _cylinder_weyl(base_m, reduced_q, reduced_p)).shift(reduced_p)

    match = lhs == rhs
    report = ReductionReport(pp, q, parity, reduced_p, reduced_q, lhs, rhs, match)
    if not match:
        raise ConsistencyError(f"adjoint Weyl reduction failed for p={pp}, q={q}")
    return report


@dataclass(frozen=True)
class ScalingLimitRow:
    p: int
    l: int
    ratio: Fraction
    coefficient_exact: PiHalfValue
    coefficient_approx: float
    limit_approx: float


def scaling_limit_report(kc: WeylCoefficients, p_list: Sequence[int], l: int) -> list[ScalingLimitRow]:
    """Convergence table for the t^(2l) coefficient of W^p(sqrt(p) t) -> k_{2l}.

    The rescaled coefficient is k_{2l} * p^l / prod_{i=1..l}(p + 2i); the ratio
    tends to 1 as p grows.
    """
    if not 0 <= l < len(kc.k):
        raise PreconditionError(f"coefficient index l={l} out of range")
    k_exact = kc.k[l]
    k_float = float(k_exact)
    rows = []
    for p in p_list:
        pp = _normalize_index(p)
        if pp is None:
            raise PreconditionError("scaling limit rows need finite p")
        ratio = Fraction(pp**l) * index_weight(pp, l)
        value = k_exact * ratio
        rows.append(ScalingLimitRow(pp, l, ratio, value, float(value), k_float))
    return rows
