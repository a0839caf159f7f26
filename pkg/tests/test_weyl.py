from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tubepoly.bodies import adjoint_lift, ball_polynomial, cube_polynomial
from tubepoly.errors import PreconditionError
from tubepoly.polynomials import ExactPoly, jensen_multiplier
from tubepoly.scalars import PiHalfValue, unit_ball_volume
from tubepoly.weyl import (
    WeylCoefficients,
    adjoint_weyl_reduction,
    halftube_polynomial,
    index_weight,
    scaling_limit_report,
    weyl1_from_minkowski,
    weyl_coefficient_factor,
    weyl_coefficients,
    weyl_index_p,
)

F = Fraction
PI = PiHalfValue.pi_power(2)

small_fractions = st.builds(F, st.integers(-6, 6), st.integers(1, 6))
small_polys = st.builds(ExactPoly, st.lists(small_fractions, min_size=1, max_size=7))


def sphere_surface_volume(n: int) -> PiHalfValue:
    """Vol_n(S^n) = (n+1) omega_{n+1}."""
    return unit_ball_volume(n + 1) * (n + 1)


# -- half-tube and first Weyl polynomial -----------------------------------


def test_halftube_examples():
    m = ball_polynomial(2)  # pi (1+t)^2
    assert halftube_polynomial(m) == ExactPoly([2 * PI, PI])
    assert halftube_polynomial(ExactPoly()).is_zero


@settings(max_examples=40, deadline=None)
@given(small_polys)
def test_halftube_even_average_is_weyl1(m):
    plus = halftube_polynomial(m)
    # (W^+(t) + W^+(-t)) / 2 keeps exactly the even part of W^+.
    even_avg = ExactPoly(
        c if k % 2 == 0 else PiHalfValue() for k, c in enumerate(plus.coeffs)
    )
    assert even_avg == weyl1_from_minkowski(m)


def test_weyl1_of_ball3():
    # M = omega_3 (1+t)^3, odd part 3 omega_3 (t + t^3) ... / t
    w1 = weyl1_from_minkowski(ball_polynomial(3))
    w3 = unit_ball_volume(3)
    assert w1 == ExactPoly([3 * w3, 0, w3])


# -- coefficient extraction ------------------------------------------------


def test_weyl_factor_values():
    assert weyl_coefficient_factor(0) == 1
    assert weyl_coefficient_factor(1) == 3
    assert weyl_coefficient_factor(2) == 15
    # Against the closed form 2^l Gamma(l + 3/2) / Gamma(3/2):
    for l in range(8):
        expect = F(2**l) * F(math.factorial(2 * l + 2), 4 ** (l + 1) * math.factorial(l + 1)) / F(1, 2)
        assert weyl_coefficient_factor(l) == expect


def test_weyl_coefficients_sphere2():
    kc = weyl_coefficients(ball_polynomial(3), 2)
    assert kc.surface_dim == 2
    assert kc.k == (4 * PI, 4 * PI)  # surface area and Euler coefficient of S^2


def test_weyl_coefficients_degree_mismatch():
    with pytest.raises(PreconditionError):
        weyl_coefficients(ball_polynomial(3), 3)


@pytest.mark.parametrize("n", range(1, 13))
def test_sphere_coefficients_closed_form(n):
    # k_{2l}(S^n) = Vol_n(S^n) n! / ((n-2l)! l! 2^l)
    kc = weyl_coefficients(ball_polynomial(n + 1), n)
    vol = sphere_surface_volume(n)
    for l in range(n // 2 + 1):
        expect = vol * F(math.factorial(n), math.factorial(n - 2 * l) * math.factorial(l) * 2**l)
        assert kc.k[l] == expect


@pytest.mark.parametrize("m", range(1, 6))
def test_sphere_euler_identity(m):
    # Top coefficient of an even sphere: k_{2m}(S^{2m}) = 2 (2 pi)^m, exactly.
    kc = weyl_coefficients(ball_polynomial(2 * m + 1), 2 * m)
    assert kc.k[m] == PiHalfValue.pi_power(2 * m, 2 * 2**m)


@pytest.mark.parametrize("n", range(1, 13))
def test_cube_surface_coefficients_closed_form(n):
    # k_{2l}(dQ^{n+1}) = 2^{n+1} C(n+1, 2l+1) (pi/2)^l
    kc = weyl_coefficients(cube_polynomial(n + 1), n)
    vol = 2 ** (n + 1) * (n + 1)  # surface volume of the (n+1)-cube of side 2
    for l in range(n // 2 + 1):
        expect = PiHalfValue.pi_power(2 * l, F(2 ** (n + 1) * math.comb(n + 1, 2 * l + 1), 2**l))
        assert kc.k[l] == expect
        display = F(math.factorial(n), math.factorial(n - 2 * l) * math.factorial(2 * l + 1))
        assert kc.k[l] == vol * display * PiHalfValue.pi_power(2 * l, F(1, 2**l))


@pytest.mark.parametrize("n", range(2, 13))
def test_cube_cylinder_coefficients_closed_form(n):
    # k_{2l}(d(Q^n x 0)) = 2^{n+1} C(n, 2l) (pi/2)^l  — exponent l, not 2l.
    lifted = adjoint_lift(cube_polynomial(n), 1)
    kc = weyl_coefficients(lifted, n)
    for l in range(n // 2 + 1):
        expect = PiHalfValue.pi_power(2 * l, F(2 ** (n + 1) * math.comb(n, 2 * l), 2**l))
        assert kc.k[l] == expect


@settings(max_examples=30, deadline=None)
@given(small_polys)
def test_general_cylinder_rule(m):
    # k_{2l}(d(V x 0)) = 2^{l+1} l! m_{2l}(V) for any base polynomial.
    n = m.degree
    if n < 1:
        return
    lifted = adjoint_lift(m, 1)
    kc = weyl_coefficients(lifted, n)
    for l in range(n // 2 + 1):
        assert kc.k[l] == m.coeff(2 * l) * F(2 ** (l + 1) * math.factorial(l))


@pytest.mark.parametrize("n", range(2, 13))
def test_sphere_jensen_scale_identity(n):
    # k_{2l}(S^n) = Vol * n^{2l} * j_{n,2l} * 1/(l! 2^l): fixes the Jensen
    # index at the surface dimension for the even series families.
    kc = weyl_coefficients(ball_polynomial(n + 1), n)
    vol = sphere_surface_volume(n)
    for l in range(n // 2 + 1):
        expect = vol * (F(n ** (2 * l)) * jensen_multiplier(n, 2 * l) * F(1, math.factorial(l) * 2**l))
        assert kc.k[l] == expect


@pytest.mark.parametrize("n", range(2, 13))
def test_cube_surface_jensen_scale_identity(n):
    kc = weyl_coefficients(cube_polynomial(n + 1), n)
    vol = 2 ** (n + 1) * (n + 1)
    for l in range(n // 2 + 1):
        kappa = PiHalfValue.pi_power(2 * l, F(1, 2**l * math.factorial(2 * l + 1)))
        expect = kappa * (vol * F(n ** (2 * l)) * jensen_multiplier(n, 2 * l))
        assert kc.k[l] == expect


# -- index weighting -------------------------------------------------------


def test_index_weight_values():
    assert index_weight(1, 0) == 1
    assert index_weight(1, 1) == F(1, 3)
    assert index_weight(2, 1) == F(1, 4)
    assert index_weight(3, 2) == F(1, 5 * 7)
    assert index_weight("inf", 5) == 1
    assert index_weight(None, 2) == 1
    assert index_weight(float("inf"), 2) == 1


def test_index_weight_gamma_form():
    # 1 / prod(p+2i) = 2^(-l) Gamma(p/2+1) / Gamma(p/2+l+1) for even p.
    for p in (2, 4, 6):
        for l in range(5):
            expect = F(math.factorial(p // 2), 2**l * math.factorial(p // 2 + l))
            assert index_weight(p, l) == expect


def test_index_weight_rejects_bad_index():
    with pytest.raises(PreconditionError):
        index_weight(0, 1)
    with pytest.raises(PreconditionError):
        index_weight(-2, 1)


def test_weyl_index_p_sphere2():
    kc = weyl_coefficients(ball_polynomial(3), 2)
    w1 = weyl_index_p(kc, 1)
    assert w1 == ExactPoly([4 * PI, 0, PI * F(4, 3)])
    winf = weyl_index_p(kc, "inf")
    assert winf == ExactPoly([4 * PI, 0, 4 * PI])


@settings(max_examples=30, deadline=None)
@given(small_polys)
def test_weyl_index_1_matches_direct_route(m):
    n = m.degree
    if n < 1:
        return
    kc = weyl_coefficients(m, n - 1)
    via_k = weyl_index_p(kc, 1)
    direct = weyl1_from_minkowski(m)
    assert via_k == direct


# -- adjoint reduction -----------------------------------------------------


@pytest.mark.parametrize("p,q", [(1, 2), (2, 2), (3, 4), (1, 4)])
def test_reduction_even_q(p, q):
    for base in (ball_polynomial(2), cube_polynomial(3)):
        report = adjoint_weyl_reduction(base, p, q)
        assert report.match
        assert report.parity == "even"
        assert report.reduced_p == p + q and report.reduced_q == 0


@pytest.mark.parametrize("p,q", [(1, 3), (2, 3), (1, 5), (4, 3)])
def test_reduction_odd_q(p, q):
    for base in (ball_polynomial(2), cube_polynomial(2)):
        report = adjoint_weyl_reduction(base, p, q)
        assert report.match
        assert report.parity == "odd"
        assert report.reduced_p == p + q - 1 and report.reduced_q == 1


def test_reduction_q1_is_identity():
    report = adjoint_weyl_reduction(ball_polynomial(2), 2, 1)
    assert report.match and report.lhs == report.rhs
    assert report.reduced_p == 2 and report.reduced_q == 1


def test_reduction_rejects_infinite_index():
    with pytest.raises(PreconditionError):
        adjoint_weyl_reduction(ball_polynomial(2), "inf", 2)


def test_reduction_example_value():
    # V = B^2, q = 2, p = 1: both sides equal (8/3) pi^2 t^3.
    report = adjoint_weyl_reduction(ball_polynomial(2), 1, 2)
    assert report.lhs == ExactPoly([0, 0, 0, PiHalfValue.pi_power(4, F(8, 3))])


# -- scaling limit ---------------------------------------------------------


def test_scaling_limit_rows():
    kc = weyl_coefficients(ball_polynomial(3), 2)
    rows = scaling_limit_report(kc, [2, 10, 100], 1)
    assert [r.ratio for r in rows] == [F(1, 2), F(10, 12), F(100, 102)]
    assert rows[0].coefficient_exact == kc.k[1] * F(1, 2)
    assert rows[-1].limit_approx == pytest.approx(float(kc.k[1]))


def test_scaling_limit_ratio_monotone_to_one():
    kc = WeylCoefficients(4, (PiHalfValue.from_rational(1),) * 3)
    rows = scaling_limit_report(kc, list(range(1, 40)), 2)
    ratios = [r.ratio for r in rows]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < 1


def test_scaling_limit_index_range():
    kc = weyl_coefficients(ball_polynomial(3), 2)
    with pytest.raises(PreconditionError):
        scaling_limit_report(kc, [2], 5)
