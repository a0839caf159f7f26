"""Limiting entire functions: exact Taylor prefixes, closed forms,
integral representations, asymptotics, and truncation-root experiments.

The families here are the degree-to-infinity limits of the body polynomials:
an exponential-type family M_ball_adjoint(q) (cylinder inflation over an
infinite-dimensional ball, normalized to value 1 at 0), four oscillatory
families W_* indexed by p in {1, 2, ...} or infinity (sphere, ball-cylinder,
cube-surface, cube-cylinder limits, written in the real-rooted convention
with alternating even coefficients), a scaled Mittag-Leffler series, and a
generic Gamma-ratio series (Fox-Wright shape) that reproduces the first
family for specific parameters.

Everything downstream works on truncations: coefficients are exact ring
elements, and the "evidence" harness builds Jensen polynomials of growing
degree and watches where their roots go.  No arbitrary-precision
entire-function arithmetic is attempted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
from scipy import integrate

from .errors import PreconditionError, UnsupportedExactError
from .polynomials import ExactPoly, jensen_polynomial
from .scalars import (
    ONE,
    ZERO,
    PiHalfValue,
    as_value,
    gamma_half,
    monomial_ratio,
    to_mpf,
)

_W_FAMILIES = ("W_ball", "W_ball_cyl", "W_cube", "W_cube_cyl")
_FAMILIES = ("M_ball_adjoint",) + _W_FAMILIES + ("MittagLeffler", "FoxWright")


@dataclass(frozen=True)
class SeriesSpec:
    """A member of one of the supported entire-function families.

    ``index`` is q for the exponential family and p for the W families;
    None stands for the index-infinity member.  The Fox-Wright shape takes
    explicit (a, A) / (b, B) parameter lists instead.
    """

    family: str
    index: int | None = None
    upper: tuple[tuple[Fraction, Fraction], ...] = ()
    lower: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}")
        if self.family == "M_ball_adjoint":
            if self.index is None or self.index < 0:
                raise PreconditionError("the exponential family needs finite q >= 0")
        elif self.family in _W_FAMILIES:
            if self.index is not None and self.index < 1:
                raise PreconditionError("index p must be >= 1 or None (infinity)")
        elif self.family == "FoxWright":
            if not self.lower and not self.upper:
                raise PreconditionError("Fox-Wright shape needs parameter lists")

    def label(self) -> str:
        if self.family == "FoxWright":
            return "FoxWright"
        if self.family in ("MittagLeffler",):
            return self.family
        idx = "inf" if self.index is None else str(self.index)
        return f"{self.family}({idx})"


def m_ball_adjoint(q: int) -> SeriesSpec:
    return SeriesSpec("M_ball_adjoint", q)


def w_ball(p: int | None) -> SeriesSpec:
    return SeriesSpec("W_ball", p)


def w_ball_cyl(p: int | None) -> SeriesSpec:
    return SeriesSpec("W_ball_cyl", p)


def w_cube(p: int | None) -> SeriesSpec:
    return SeriesSpec("W_cube", p)


def w_cube_cyl(p: int | None) -> SeriesSpec:
    return SeriesSpec("W_cube_cyl", p)


def mittag_leffler() -> SeriesSpec:
    return SeriesSpec("MittagLeffler")


def fox_wright(
    upper: Sequence[tuple[Fraction, Fraction]],
    lower: Sequence[tuple[Fraction, Fraction]],
) -> SeriesSpec:
    return SeriesSpec(
        "FoxWright",
        None,
        tuple((Fraction(a), Fraction(A)) for a, A in upper),
        tuple((Fraction(b), Fraction(B)) for b, B in lower),
    )


# ---------------------------------------------------------------------------
# exact Taylor coefficients
# ---------------------------------------------------------------------------


def laguerre_multiplier(p: int, two_l: int) -> Fraction:
    """2^{-l} Gamma(p/2+1)/Gamma(p/2+l+1) = 1/prod_{i=1..l}(p+2i): the exact
    factor taking an index-infinity coefficient at t^{2l} to index p."""
    if two_l % 2 != 0 or two_l < 0:
        raise PreconditionError("even nonnegative coefficient position required")
    out = Fraction(1)
    for i in range(1, two_l // 2 + 1):
        out /= p + 2 * i
    return out


def _kappa(family: str, l: int) -> PiHalfValue:
    if family == "W_ball":
        return as_value(Fraction(1, math.factorial(l) * 2**l))
    if family == "W_ball_cyl":
        return as_value(Fraction(2**l * math.factorial(l), math.factorial(2 * l)))
    if family == "W_cube":
        return PiHalfValue.pi_power(2 * l, Fraction(1, 2**l * math.factorial(2 * l + 1)))
    if family == "W_cube_cyl":
        return PiHalfValue.pi_power(2 * l, Fraction(1, 2**l * math.factorial(2 * l)))
    raise PreconditionError(family)


def _half_gamma_or_error(two_x: Fraction) -> PiHalfValue:
    if two_x.denominator != 1 or two_x <= 0:
        raise UnsupportedExactError(
            f"Gamma argument {two_x}/2 is not a positive half-integer"
        )
    return gamma_half(int(two_x))


def taylor_coefficients(spec: SeriesSpec, count: int) -> list[PiHalfValue]:
    """The first ``count`` Taylor coefficients (positions 0..count-1), exact."""
    if count < 1:
        raise PreconditionError("count >= 1 required")
    fam, idx = spec.family, spec.index
    out: list[PiHalfValue] = []
    if fam == "M_ball_adjoint":
        g_q = gamma_half(idx + 2)
        for k in range(count):
            num = g_q * gamma_half(k + 2)
            den = gamma_half(k + idx + 2)
            out.append(monomial_ratio(num, den) * Fraction(1, math.factorial(k)))
        return out
    if fam in _W_FAMILIES:
        for k in range(count):
            if k % 2 == 1:
                out.append(ZERO)
                continue
            l = k // 2
            c = _kappa(fam, l) * Fraction((-1) ** l)
            if idx is not None:
                c = c * laguerre_multiplier(idx, 2 * l)
            out.append(c)
        return out
    if fam == "MittagLeffler":
        # sqrt(pi)-scaled: sqrt(pi)/Gamma(k + 1/2) = 4^k k!/(2k)!
        return [
            as_value(Fraction(4**k * math.factorial(k), math.factorial(2 * k)))
            for k in range(count)
        ]
    # Fox-Wright shape: prod Gamma(a + A k) / prod Gamma(b + B k) / k!
    for k in range(count):
        num = ONE
        for a, big_a in spec.upper:
            num = num * _half_gamma_or_error(2 * (a + big_a * k))
        den = ONE
        for b, big_b in spec.lower:
            den = den * _half_gamma_or_error(2 * (b + big_b * k))
        try:
            c = monomial_ratio(num, den)
        except ValueError as exc:
            raise UnsupportedExactError(
                f"coefficient {k} leaves the scalar ring: {exc}"
            ) from None
        out.append(c * Fraction(1, math.factorial(k)))
    return out


def series_polynomial(spec: SeriesSpec, count: int) -> ExactPoly:
    return ExactPoly(taylor_coefficients(spec, count))


def series_eval(spec: SeriesSpec, t, terms: int = 60, precision_bits: int = 256):
    """Truncated-series value (mpmath-backed, returns complex or float)."""
    p = series_polynomial(spec, terms)
    with mpmath.mp.workprec(precision_bits):
        acc = mpmath.mpc(0)
        for c in reversed(p.coeffs):
            acc = acc * t + to_mpf(c, precision_bits)
        val = complex(acc)
    return val.real if abs(val.imag) == 0 else val


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def i4_closed(z):
    """((2z^2 - 6z + 6) e^z + (z^2 - 6)) / z^4, the explicit q = 4 kernel.

    The numerator vanishes to fourth order at 0; below |z| = 1e-3 the
    expression is replaced by its own Taylor prefix to dodge cancellation.
    """
    z = mpmath.mpc(z)
    if abs(z) < 1e-3:
        return (
            mpmath.mpf(1) / 4
            + 2 * z / 15
            + z**2 / 24
            + z**3 / 105
            + z**4 / 576
        )
    return ((2 * z**2 - 6 * z + 6) * mpmath.e**z + (z**2 - 6)) / z**4


def closed_form_eval(spec: SeriesSpec, t):
    """Value by closed expression for the families that have one.

    Supported: W_ball(1, 2, infinity), W_cube(infinity),
    W_cube_cyl(infinity), M_ball_adjoint(2, 4), MittagLeffler.
    Near t = 0 removable singularities are evaluated by series fallback.
    Real input gives a float, complex input a complex.
    """
    fam, idx = spec.family, spec.index
    z = mpmath.mpc(t)
    was_real = z.imag == 0
    small = abs(z) < 1e-3

    def back(v):
        v = complex(v)
        return v.real if was_real else v

    singular = (
        (fam == "W_ball" and idx in (1, 2))
        or (fam == "W_cube" and idx is None)
        or (fam == "M_ball_adjoint" and idx == 2)
        or fam == "MittagLeffler"
    )
    if small and singular:
        return back(series_eval(spec, t, 30, precision_bits=128))

    if fam == "W_ball" and idx == 1:
        return back(mpmath.sin(z) / z)
    if fam == "W_ball" and idx == 2:
        return back(2 * mpmath.besselj(1, z) / z)
    if fam == "W_ball" and idx is None:
        return back(mpmath.e ** (-(z**2) / 2))
    if fam == "W_cube" and idx is None:
        c = mpmath.sqrt(mpmath.pi / 2)
        return back(mpmath.sin(c * z) / (c * z))
    if fam == "W_cube_cyl" and idx is None:
        return back(mpmath.cos(mpmath.sqrt(mpmath.pi / 2) * z))
    if fam == "M_ball_adjoint" and idx == 2:
        return back(2 * (mpmath.e**z * (z - 1) + 1) / z**2)
    if fam == "M_ball_adjoint" and idx == 4:
        return back(4 * i4_closed(z))
    if fam == "MittagLeffler":
        r = mpmath.sqrt(z)
        return back(1 + mpmath.sqrt(mpmath.pi) * r * mpmath.e**z * mpmath.erf(r))
    raise PreconditionError(f"{spec.label()} has no implemented closed form")


# ---------------------------------------------------------------------------
# integral representations
# ---------------------------------------------------------------------------


def integral_rep_eval(spec: SeriesSpec, t: float, quadrature_points: int = 96) -> float:
    """Value via the one-dimensional integral representation.

    Supported: M_ball_adjoint(q >= 1) with kernel e^(xi t); W_ball_cyl(p >= 1)
    with kernel cos(t xi); W_ball(p >= 1) via the classical cosine transform;
    MittagLeffler.  The (1 - xi^2)-power endpoint weights are removed by the
    substitution xi = sin(theta), the (1 - xi)^(-1/2) weight by xi = 1 - u^2,
    after which adaptive quadrature is applied to a smooth integrand.
    """
    fam, idx = spec.family, spec.index
    t = float(t)
    if fam == "M_ball_adjoint":
        if idx is None or idx < 1:
            raise PreconditionError("integral representation needs q >= 1")
        q = idx

        def f(theta):
            s, c = math.sin(theta), math.cos(theta)
            return q * c ** (q - 1) * s * math.exp(t * s)

        val, _ = integrate.quad(f, 0.0, math.pi / 2, limit=max(50, quadrature_points))
        return val
    if fam == "W_ball_cyl":
        if idx is None:
            raise PreconditionError("integral representation needs finite p")
        p = idx

        def f(theta):
            s, c = math.sin(theta), math.cos(theta)
            return p * c ** (p - 1) * s * math.cos(t * s)

        val, _ = integrate.quad(f, 0.0, math.pi / 2, limit=max(50, quadrature_points))
        return val
    if fam == "W_ball":
        if idx is None:
            raise PreconditionError("integral representation needs finite p")
        p = idx
        front = math.gamma(p / 2 + 1) / (
            math.sqrt(math.pi) * math.gamma((p + 1) / 2)
        )

        def f(theta):
            s, c = math.sin(theta), math.cos(theta)
            return 2 * front * c**p * math.cos(t * s)

        val, _ = integrate.quad(f, 0.0, math.pi / 2, limit=max(50, quadrature_points))
        return val
    if fam == "MittagLeffler":
        # 1 + t int_0^1 (1-xi)^(-1/2) e^(t xi) dxi  ->  1 + 2t e^t int_0^1 e^(-t u^2) du
        def f(u):
            return 2 * t * math.exp(t * (1 - u * u))

        val, _ = integrate.quad(f, 0.0, 1.0, limit=max(50, quadrature_points))
        return 1.0 + val
    raise PreconditionError(f"{spec.label()} has no implemented integral representation")


def kakeya_polya_check(
    weight_samples: Sequence[tuple[float, float]],
    t_grid: Sequence[complex],
) -> dict:
    """Quadrature oracle for kernels with non-negative non-decreasing weight.

    ``weight_samples`` is a grid (xi_i, phi_i) on [0, 1]; the weight must be
    non-negative and non-decreasing (the hypothesis under which the Laplace
    kernel integral has no zero in the closed right half-plane).  Evaluates
    I(z) = int_0^1 phi(xi) e^(xi z) d xi on every z in ``t_grid`` and reports
    the minimum modulus found.
    """
    pts = sorted((float(x), float(v)) for x, v in weight_samples)
    if len(pts) < 2:
        raise PreconditionError("need at least two weight samples")
    xs = [x for x, _ in pts]
    vs = [v for _, v in pts]
    if xs[0] < 0 or xs[-1] > 1:
        raise PreconditionError("weight grid must lie in [0, 1]")
    if any(v < 0 for v in vs):
        raise PreconditionError("weight must be non-negative")
    if any(b < a for a, b in zip(vs, vs[1:])):
        raise PreconditionError("weight must be non-decreasing")
    if max(vs) == 0:
        raise PreconditionError("weight must not vanish identically")

    def interp(x: float) -> float:
        if x <= xs[0]:
            return vs[0]
        if x >= xs[-1]:
            return vs[-1]
        for i in range(len(xs) - 1):
            if xs[i] <= x <= xs[i + 1]:
                w = (x - xs[i]) / (xs[i + 1] - xs[i]) if xs[i + 1] > xs[i] else 0.0
                return vs[i] + w * (vs[i + 1] - vs[i])
        return vs[-1]  # pragma: no cover

    results = []
    for z in t_grid:
        z = complex(z)
        if z.real < 0:
            raise PreconditionError("grid points must lie in the closed right half-plane")
        re, _ = integrate.quad(lambda x: interp(x) * math.exp(x * z.real) * math.cos(x * z.imag), 0, 1, limit=200)
        im, _ = integrate.quad(lambda x: interp(x) * math.exp(x * z.real) * math.sin(x * z.imag), 0, 1, limit=200)
        results.append((z, abs(complex(re, im))))
    min_z, min_abs = min(results, key=lambda pair: pair[1])
    return {
        "min_abs": min_abs,
        "argmin": min_z,
        "all_nonzero": min_abs > 0.0,
        "count": len(results),
    }


# ---------------------------------------------------------------------------
# asymptotics
# ---------------------------------------------------------------------------


def logarithmic_parabola(q: int, y: float) -> float:
    """Real part of the root locus of the exponential family at height y:
    x = (q/2 - 1) ln(|y| + 1) + ln c_q with c_q = 2^(1 - q/2)/Gamma(q/2)."""
    if q < 1:
        raise PreconditionError("q >= 1 required")
    c_q = 2 ** (1 - q / 2) / math.gamma(q / 2)
    return (q / 2 - 1) * math.log(abs(y) + 1) + math.log(c_q)


def asymptotic_eval(spec: SeriesSpec, z: complex, sector: str):
    """Leading asymptotic form and a measured-constant error bound.

    Exponential family (q = spec.index, normalized so the value at 0 is 1):
      right:      Gamma(q/2+1) 2^(q/2) z^(-q/2) e^z
      left:       q z^(-2)
      imaginary:  the sum of both forms
    Error bounds are the leading form times measured relative constants
    (right/imaginary: q(q+2)/4/|z|; left: (3|q-2|+4)/|z|^2).

    W_ball_cyl(p) supports sector "real":
      Gamma(p/2+1) 2^(p/2) t^(-p/2) cos(t - pi p/4) - p t^(-2),
    with absolute bound (p^2/2) G(p) t^(-p/2-1) + 6 p max(p/2-1, 1) t^(-4).
    """
    z = complex(z)
    if abs(z) < 10:
        raise PreconditionError("asymptotic forms require |z| >= 10")
    fam, idx = spec.family, spec.index
    if fam == "M_ball_adjoint":
        if idx is None or idx < 1:
            raise PreconditionError("finite q >= 1 required")
        q = idx
        zc = mpmath.mpc(z)
        expo = complex(
            mpmath.gamma(q / 2 + 1) * 2 ** (q / 2) * zc ** (-mpmath.mpf(q) / 2) * mpmath.e**zc
        )
        alg = complex(q / zc**2)
        if sector == "right":
            approx = expo
            bound = abs(expo) * q * (q + 2) / 4 / abs(z)
        elif sector == "left":
            approx = alg
            bound = abs(alg) * (3 * abs(q - 2) + 4) / abs(z) ** 2
        elif sector == "imaginary":
            approx = expo + alg
            bound = (abs(expo) + abs(alg)) * q * (q + 2) / 4 / abs(z)
        else:
            raise PreconditionError(f"unknown sector {sector!r}")
        return approx, bound
    if fam == "W_ball_cyl":
        if idx is None:
            raise PreconditionError("finite p required")
        if sector != "real":
            raise PreconditionError("the oscillatory family supports sector 'real'")
        p = idx
        t = z.real
        if abs(z.imag) > 1e-12 * abs(t):
            raise PreconditionError("sector 'real' needs a real argument")
        g = math.gamma(p / 2 + 1) * 2 ** (p / 2)
        at = abs(t)
        approx = g * at ** (-p / 2) * math.cos(at - math.pi * p / 4) - p / at**2
        bound = (p * p / 2) * g * at ** (-p / 2 - 1) + 6 * p * max(p / 2 - 1, 1.0) * at**-4
        return approx, bound
    raise PreconditionError(f"{spec.label()} has no implemented asymptotic form")


# ---------------------------------------------------------------------------
# truncation root trends
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrendRow:
    degree: int
    violations: int
    max_violation: float


@dataclass(frozen=True)
class TrendReport:
    spec_label: str
    mode: str
    rows: tuple[TrendRow, ...]
    onset_degree: int | None

    def to_json(self) -> dict:
        return {
            "family": self.spec_label,
            "mode": self.mode,
            "rows": [
                {
                    "degree": r.degree,
                    "violations": r.violations,
                    "max_violation": r.max_violation,
                }
                for r in self.rows
            ],
            "onset_degree": self.onset_degree,
        }


def _trend_precision(degree: int) -> int:
    # coefficient span of the W families reaches ~10^(-1.1 * degree);
    # a linear bit budget with headroom keeps the root finder honest
    return max(320, 4 * degree + 256)


def _polyroots_escalating(desc, prec: int):
    for attempt in range(4):
        try:
            with mpmath.mp.workprec(prec):
                roots, _ = mpmath.mp.polyroots(
                    desc(prec), maxsteps=500 * (attempt + 1), extraprec=prec, error=True
                )
            return roots, prec
        except mpmath.libmp.NoConvergence:
            prec *= 2
    raise PreconditionError("root finding did not converge; raise the degree budget")


def _even_series_roots(poly: ExactPoly, prec: int):
    """Roots in t of an even polynomial, via the half-degree polynomial in
    s = t^2 (each s-root expands to a +- pair)."""
    coeffs_s = [poly.coeff(2 * l) for l in range(poly.degree // 2 + 1)]

    def desc(p):
        return [to_mpf(c, p) for c in reversed(coeffs_s)]

    s_roots, used = _polyroots_escalating(desc, prec)
    out = []
    with mpmath.mp.workprec(used):
        for s in s_roots:
            r = mpmath.sqrt(mpmath.mpc(s))
            out.extend([r, -r])
    return out


def _plain_roots(poly: ExactPoly, prec: int):
    def desc(p):
        return [to_mpf(c, p) for c in reversed(poly.coeffs)]

    roots, _ = _polyroots_escalating(desc, prec)
    return roots


def truncation_root_trend(
    spec: SeriesSpec,
    degrees: Sequence[int],
    mode: str,
    tol: float = 1e-9,
) -> TrendReport:
    """Where do the roots of the Jensen polynomials go as the degree grows?

    mode "real_axis" counts roots off the real axis (|Im| relative to
    1 + |root| above ``tol``); mode "left_half_plane" counts roots with
    positive relative real part.  Evidence, not proof: the report carries
    per-degree counts and the first degree at which a violation appears.
    """
    if mode not in ("real_axis", "left_half_plane"):
        raise PreconditionError(f"unknown mode {mode!r}")
    if not degrees or max(degrees) > 400:
        raise PreconditionError("degrees must be nonempty with max <= 400")
    coeffs = taylor_coefficients(spec, max(degrees) + 1)
    even = all(c.is_zero for k, c in enumerate(coeffs) if k % 2 == 1)
    rows = []
    onset = None
    for n in sorted(degrees):
        jp = jensen_polynomial(coeffs[: n + 1], n)
        prec = _trend_precision(n)
        roots = _even_series_roots(jp, prec) if even else _plain_roots(jp, prec)
        bad = 0
        worst = 0.0
        for r in roots:
            scale = 1.0 + abs(complex(r))
            if mode == "real_axis":
                viol = abs(float(r.imag)) / scale
            else:
                viol = float(r.real) / scale
            if viol > tol:
                bad += 1
                worst = max(worst, viol)
        rows.append(TrendRow(n, bad, worst))
        if bad and onset is None:
            onset = n
    return TrendReport(spec.label(), mode, tuple(rows), onset)
