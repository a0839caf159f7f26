from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tubepoly import scalars
from tubepoly.scalars import (
    ONE,
    SQRT_PI,
    ZERO,
    PiHalfValue,
    exact_div,
    gamma_half,
    monomial_ratio,
    sign_and_float,
    to_mpf,
    unit_ball_volume,
    value_from_json,
    value_to_json,
)


def frac(n, d=1):
    return Fraction(n, d)


small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=9),
)

ring_values = st.builds(
    PiHalfValue,
    st.dictionaries(st.integers(min_value=0, max_value=6), small_fractions, max_size=4),
)


# -- construction and normal form -----------------------------------------


def test_zero_detection_is_symbolic():
    x = PiHalfValue({0: frac(1), 2: frac(-3)})
    y = PiHalfValue({2: frac(3), 0: frac(-1)})
    assert (x + y).is_zero
    assert not x.is_zero
    assert x + y == ZERO


def test_terms_merge_and_drop_zeros():
    x = PiHalfValue([(1, frac(1, 2)), (1, frac(1, 2)), (3, frac(0))])
    assert x.terms == ((1, frac(1)),)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        PiHalfValue({-1: frac(1)})


def test_monomial_accessors():
    assert SQRT_PI.monomial() == (1, frac(1))
    assert PiHalfValue.from_rational(frac(3, 4)).rational_value() == frac(3, 4)
    with pytest.raises(ValueError):
        (ONE + SQRT_PI).monomial()


# -- ring axioms -----------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(ring_values, ring_values, ring_values)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@settings(max_examples=40, deadline=None)
@given(ring_values, ring_values)
def test_product_of_nonzero_is_nonzero(a, b):
    # Q[sqrt(pi)] is an integral domain.
    if a and b:
        assert a * b


def test_sqrt_pi_squares_to_pi():
    assert SQRT_PI * SQRT_PI == PiHalfValue.pi_power(2)
    assert SQRT_PI**4 == PiHalfValue.pi_power(4)


def test_int_and_fraction_coercion():
    x = 2 + SQRT_PI * frac(1, 3)
    assert x.terms == ((0, frac(2)), (1, frac(1, 3)))
    assert 1 - ONE == ZERO
    assert frac(1, 2) * PiHalfValue.from_rational(2) == ONE


# -- gamma values ----------------------------------------------------------


def test_gamma_small_values():
    assert gamma_half(1) == SQRT_PI                      # Gamma(1/2)
    assert gamma_half(2) == ONE                          # Gamma(1)
    assert gamma_half(3) == PiHalfValue.pi_power(1, frac(1, 2))   # Gamma(3/2)
    assert gamma_half(4) == ONE                          # Gamma(2)
    assert gamma_half(5) == PiHalfValue.pi_power(1, frac(3, 4))   # Gamma(5/2)
    assert gamma_half(8) == PiHalfValue.from_rational(6)  # Gamma(4)


@pytest.mark.parametrize("two_x", range(1, 30))
def test_gamma_recurrence(two_x):
    # Gamma(x + 1) = x * Gamma(x)
    assert gamma_half(two_x + 2) == gamma_half(two_x) * frac(two_x, 2)


@pytest.mark.parametrize("two_z", range(1, 16))
def test_gamma_duplication(two_z):
    # Gamma(z + 1/2) Gamma(z + 1) = sqrt(pi) 2**(-2z) Gamma(2z + 1)
    lhs = gamma_half(two_z + 1) * gamma_half(two_z + 2)
    rhs = SQRT_PI * Fraction(1, 1) * gamma_half(2 * two_z + 2)
    # two_z = 2z, so 2**(-2z) = 2**(-two_z)
    assert lhs * (2**two_z) == rhs


def test_gamma_half_rejects_nonpositive():
    with pytest.raises(ValueError):
        gamma_half(0)
    with pytest.raises(ValueError):
        gamma_half(-3)


# -- unit ball volumes -----------------------------------------------------


def test_ball_volumes_low_dimensions():
    assert unit_ball_volume(0) == ONE
    assert unit_ball_volume(1) == PiHalfValue.from_rational(2)
    assert unit_ball_volume(2) == PiHalfValue.pi_power(2)
    assert unit_ball_volume(3) == PiHalfValue.pi_power(2, frac(4, 3))
    assert unit_ball_volume(4) == PiHalfValue.pi_power(4, frac(1, 2))
    assert unit_ball_volume(5) == PiHalfValue.pi_power(4, frac(8, 15))


def test_ball_volume_negative_convention():
    assert unit_ball_volume(-1) == ONE
    assert unit_ball_volume(-3) == ONE


@pytest.mark.parametrize("p", range(0, 22))
def test_ball_volume_matches_gamma_formula(p):
    # omega_p * Gamma(p/2 + 1) = pi**(p/2)
    assert unit_ball_volume(p) * gamma_half(p + 2) == PiHalfValue.pi_power(p)


@pytest.mark.parametrize("p", range(1, 15))
def test_ball_volume_beta_recursion(p):
    # omega_p = omega_{p-1} * B((p+1)/2, 1/2)
    beta = monomial_ratio(gamma_half(p + 1) * gamma_half(1), gamma_half(p + 2))
    assert unit_ball_volume(p) == unit_ball_volume(p - 1) * beta


# -- division helpers ------------------------------------------------------


def test_monomial_ratio_examples():
    assert monomial_ratio(PiHalfValue.pi_power(2), SQRT_PI) == SQRT_PI
    assert monomial_ratio(SQRT_PI * frac(3), SQRT_PI * frac(2)) == PiHalfValue.from_rational(frac(3, 2))
    with pytest.raises(ValueError):
        monomial_ratio(ONE, SQRT_PI)


@settings(max_examples=40, deadline=None)
@given(ring_values, ring_values)
def test_exact_div_roundtrip(a, b):
    if not b:
        return
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_inexact():
    with pytest.raises(ValueError):
        exact_div(SQRT_PI, ONE + SQRT_PI)
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, ZERO)


# -- sign and float --------------------------------------------------------


def test_sign_of_zero():
    assert sign_and_float(ZERO) == (0, 0.0)


def test_sign_basic():
    s, f = sign_and_float(SQRT_PI - 1)
    assert s == 1 and abs(f - (math.sqrt(math.pi) - 1)) < 1e-12
    s, f = sign_and_float(1 - SQRT_PI)
    assert s == -1


def test_sign_near_cancellation():
    # 355/113 slightly exceeds pi; the margin is ~2.7e-7.
    x = PiHalfValue.from_rational(frac(355, 113)) - PiHalfValue.pi_power(2)
    s, f = sign_and_float(x, 64)
    assert s == 1
    assert abs(f - (355 / 113 - math.pi)) < 1e-12


def test_sign_tiny_coefficient():
    x = PiHalfValue.pi_power(4, frac(1, 10**40)) - PiHalfValue.pi_power(4, frac(1, 10**40 + 1))
    s, _ = sign_and_float(x)
    assert s == 1


@settings(max_examples=40, deadline=None)
@given(ring_values)
def test_sign_consistency_with_high_precision_float(x):
    s, f = sign_and_float(x)
    approx = float(to_mpf(x, 256))
    if s == 0:
        assert x.is_zero and f == 0.0
    else:
        assert s == (1 if approx > 0 else -1)
        assert f == pytest.approx(approx, rel=1e-12, abs=1e-300)


def test_to_mpf_precision():
    x = PiHalfValue.pi_power(2)
    with mpmath.mp.workprec(200):
        ref = mpmath.mp.pi
        got = to_mpf(x, 200)
        assert abs(got - ref) < mpmath.mpf(2) ** -190


# -- wire format -----------------------------------------------------------


def test_json_round_trip():
    x = PiHalfValue({0: frac(-2, 3), 3: frac(5)})
    data = value_to_json(x)
    assert data == [[0, "-2/3"], [3, "5/1"]]
    assert value_from_json(data) == x


def test_json_accepts_bare_integers():
    assert value_from_json([[2, "7"]]) == PiHalfValue.pi_power(2, 7)


def test_float_protocol():
    assert float(scalars.as_value(2)) == 2.0
    assert abs(float(SQRT_PI) - math.sqrt(math.pi)) < 1e-12
