"""Random input generators shared by the test modules.

Everything is exact-rational and deterministic given the Random instance, so
failures reproduce from the seed alone.
"""
from __future__ import annotations

import random
from fractions import Fraction

from tubepoly.polynomials import ExactPoly
from tubepoly.scalars import as_value


def log_concave_measures(n: int, rng: random.Random) -> list[Fraction]:
    """Strictly log-concave positive v_0..v_n: the consecutive ratios
    v_{k+1}/v_k are strictly decreasing, which is equivalent to strictness
    in every quadratic inequality."""
    v = [Fraction(rng.randint(1, 9))]
    rho = Fraction(rng.randint(2, 40), rng.randint(1, 9))
    for _ in range(n):
        v.append(v[-1] * rho)
        rho *= Fraction(rng.randint(1, 9), rng.randint(10, 19))
    return v


def dissipative_poly(rng: random.Random, max_factors: int = 4) -> ExactPoly:
    """Random product of (t + a) and (t^2 + b t + c) with positive rational
    parameters: every root has real part <= -min(a, b/2) < 0."""
    p = ExactPoly([as_value(1)])
    k = rng.randint(1, max_factors)
    for _ in range(k):
        if rng.random() < 0.5:
            a = Fraction(rng.randint(1, 12), rng.randint(1, 4))
            p = p * ExactPoly([as_value(a), as_value(1)])
        else:
            b = Fraction(rng.randint(1, 12), rng.randint(1, 4))
            c = Fraction(rng.randint(1, 12), rng.randint(1, 4))
            p = p * ExactPoly([as_value(c), as_value(b), as_value(1)])
    return p


def conservative_poly(rng: random.Random, max_factors: int = 4) -> ExactPoly:
    """Random product of t^2 + d_j with distinct positive rational d_j:
    roots +-i sqrt(d_j), all purely imaginary and simple."""
    k = rng.randint(1, max_factors)
    pool = [Fraction(num, den) for num in range(1, 13) for den in (1, 2, 3, 4)]
    ds = rng.sample(sorted(set(pool)), k)
    p = ExactPoly([as_value(1)])
    for d in ds:
        p = p * ExactPoly([as_value(d), as_value(0), as_value(1)])
    return p
