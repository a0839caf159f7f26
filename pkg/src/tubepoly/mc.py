"""Monte Carlo oracle for tube volumes.

Estimates Vol(V + tB) by hit-or-miss sampling over a bounding box, entirely
independent of the exact polynomial pipeline, and compares the two.  Distance
evaluators exist for balls, cubes (side 2), flat cylinders V x {0}^q,
Cartesian products (both via the Pythagorean law), and flattened ellipsoids
(no exact polynomial; the comparison target is the squeezed-cylinder limit).

Determinism: a single SeedSequence is split into per-chunk substreams, and
results are merged by summation, so a fixed (seed, samples) pair always
yields the same estimate.  When several inflation radii are compared, one
shared bounding box (sized for the largest t) keeps the samples identical
across rows; hit sets are then nested and estimates non-decreasing in t.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bodies import (
    Adjoint,
    Ball,
    BodySpec,
    Cube,
    Ellipsoid,
    Product,
    ambient_dimension,
    minkowski_polynomial,
)
from .errors import PreconditionError
from .polynomials import ExactPoly
from .scalars import sign_and_float

MAX_MC_DIMENSION = 8
_CHUNK = 1 << 18

DistanceFn = Callable[[np.ndarray], np.ndarray]


# ---------------------------------------------------------------------------
# distance evaluators
# ---------------------------------------------------------------------------


def ball_distance(points: np.ndarray, radius: float = 1.0) -> np.ndarray:
    """Distance from each row of ``points`` to the solid ball."""
    r = np.linalg.norm(points, axis=-1)
    return np.maximum(r - radius, 0.0)


def cube_distance(points: np.ndarray, half_side: float = 1.0) -> np.ndarray:
    """Distance from each row to the box [-h, h]^d."""
    overshoot = np.maximum(np.abs(points) - half_side, 0.0)
    return np.linalg.norm(overshoot, axis=-1)


def ellipsoid_distance(
    points: np.ndarray, semiaxes: Sequence[float], tol: float = 1e-12
) -> np.ndarray:
    """Distance to the solid ellipsoid sum (x_i/a_i)^2 <= 1.

    The nearest boundary point of an outside point x has coordinates
    a_i^2 x_i / (a_i^2 + lam) for the unique non-negative Lagrange
    multiplier lam solving sum a_i^2 x_i^2/(a_i^2+lam)^2 = 1; the equation
    is monotone in lam and solved by bracketed bisection.
    """
    a = np.asarray(semiaxes, dtype=float)
    if np.any(a <= 0):
        raise PreconditionError("semi-axes must be positive")
    x = np.asarray(points, dtype=float)
    a2 = a * a
    inside = np.sum((x / a) ** 2, axis=-1) <= 1.0
    out = np.zeros(x.shape[:-1])
    todo = ~inside
    if not np.any(todo):
        return out
    xs = x[todo]
    lo = np.zeros(len(xs))
    hi = np.sqrt(np.sum(a2 * xs * xs, axis=-1))
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        f = np.sum(a2 * xs * xs / (a2 + mid[:, None]) ** 2, axis=-1)
        above = f > 1.0
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    if np.any(hi - lo > tol * (1.0 + hi)):
        raise RuntimeError("ellipsoid projection did not converge")
    lam = 0.5 * (lo + hi)
    d = lam * np.sqrt(np.sum(xs * xs / (a2 + lam[:, None]) ** 2, axis=-1))
    out[todo] = d
    return out


@dataclass(frozen=True)
class SampleableBody:
    """Geometry bundle for hit-or-miss sampling.

    ``half_widths`` bounds the body itself: V is contained in the box
    prod [-hw_i, hw_i]; the sampling box adds the inflation radius on
    every axis.
    """

    name: str
    dimension: int
    distance: DistanceFn
    half_widths: tuple[float, ...]


def _pythagorean(fa: DistanceFn, da: int, fb: DistanceFn) -> DistanceFn:
    def fn(points: np.ndarray) -> np.ndarray:
        left = fa(points[..., :da])
        right = fb(points[..., da:])
        return np.sqrt(left * left + right * right)

    return fn


def sampleable(spec: BodySpec) -> SampleableBody:
    """Build the distance evaluator and bounding box for a body spec."""
    if isinstance(spec, Ball):
        return SampleableBody(
            f"ball({spec.n})", spec.n, ball_distance, (1.0,) * spec.n
        )
    if isinstance(spec, Cube):
        return SampleableBody(
            f"cube({spec.n})", spec.n, cube_distance, (1.0,) * spec.n
        )
    if isinstance(spec, Adjoint):
        base = sampleable(spec.base)
        fn = _pythagorean(base.distance, base.dimension, ball_distance_zero_radius)
        return SampleableBody(
            f"adjoint({base.name},{spec.q})",
            base.dimension + spec.q,
            fn,
            base.half_widths + (0.0,) * spec.q,
        )
    if isinstance(spec, Product):
        left = sampleable(spec.left)
        right = sampleable(spec.right)
        fn = _pythagorean(left.distance, left.dimension, right.distance)
        return SampleableBody(
            f"product({left.name},{right.name})",
            left.dimension + right.dimension,
            fn,
            left.half_widths + right.half_widths,
        )
    if isinstance(spec, Ellipsoid):
        axes = (1.0,) * spec.n + (float(spec.eps),) * spec.q

        def fn(points: np.ndarray) -> np.ndarray:
            return ellipsoid_distance(points, axes)

        return SampleableBody(
            f"ellipsoid({spec.n},{spec.q},{float(spec.eps)})",
            spec.n + spec.q,
            fn,
            axes,
        )
    raise PreconditionError(f"body {spec!r} has no sampleable geometry")


def ball_distance_zero_radius(points: np.ndarray) -> np.ndarray:
    """Distance to the origin: the q normal directions of a flat cylinder."""
    return np.linalg.norm(points, axis=-1)


# ---------------------------------------------------------------------------
# hit-or-miss estimation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TubeVolumeEstimate:
    value: float
    std_error: float
    hits: int
    samples: int
    box_volume: float

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "std_error": self.std_error,
            "hits": self.hits,
            "samples": self.samples,
            "box_volume": self.box_volume,
        }


def tube_volume_estimate(
    spec: BodySpec,
    t: float,
    samples: int,
    seed: int,
    box_padding: float | None = None,
) -> TubeVolumeEstimate:
    """Hit-or-miss estimate of Vol(V + tB) with binomial standard error.

    ``box_padding`` (default t) sets the sampling box to half-widths
    hw_i + padding; passing the largest radius of a grid makes estimates
    at several t share identical sample points.
    """
    if t <= 0:
        raise PreconditionError("inflation radius t must be positive")
    if samples < 10**4:
        raise PreconditionError("at least 1e4 samples required")
    pad = t if box_padding is None else float(box_padding)
    if pad < t:
        raise PreconditionError("box padding must be at least t")
    body = sampleable(spec)
    if body.dimension > MAX_MC_DIMENSION:
        raise PreconditionError(
            f"dimension {body.dimension} exceeds the MC cap {MAX_MC_DIMENSION}"
        )
    half = np.asarray(body.half_widths) + pad
    box_volume = float(np.prod(2.0 * half))
    streams = np.random.SeedSequence(seed).spawn((samples + _CHUNK - 1) // _CHUNK)
    hits = 0
    done = 0
    for stream in streams:
        m = min(_CHUNK, samples - done)
        rng = np.random.default_rng(stream)
        pts = (2.0 * rng.random((m, body.dimension)) - 1.0) * half
        hits += int(np.count_nonzero(body.distance(pts) <= t))
        done += m
    frac = hits / samples
    value = box_volume * frac
    se = box_volume * float(np.sqrt(frac * (1.0 - frac) / samples))
    return TubeVolumeEstimate(value, se, hits, samples, box_volume)


# ---------------------------------------------------------------------------
# comparison against the exact polynomials
# ---------------------------------------------------------------------------


def poly_float(m: ExactPoly, t: float) -> float:
    acc = 0.0
    for c in reversed(m.coeffs):
        acc = acc * t + sign_and_float(c)[1]
    return acc


@dataclass(frozen=True)
class ComparisonRow:
    t: float
    estimate: float
    std_error: float
    predicted: float
    z_score: float

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "estimate": self.estimate,
            "std_error": self.std_error,
            "predicted": self.predicted,
            "z": self.z_score,
        }


@dataclass(frozen=True)
class ComparisonReport:
    body: str
    rows: tuple[ComparisonRow, ...]
    predicted_is_limit: bool
    samples: int
    seed: int

    @property
    def max_abs_z(self) -> float:
        return max(abs(r.z_score) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "body": self.body,
            "rows": [r.to_json() for r in self.rows],
            "predicted_is_limit": self.predicted_is_limit,
            "samples": self.samples,
            "seed": self.seed,
            "max_abs_z": self.max_abs_z,
        }


def compare_oracle(
    spec: BodySpec,
    t_grid: Sequence[float],
    samples: int,
    seed: int,
) -> ComparisonReport:
    """MC estimates against polynomial predictions on a shared sample set.

    For an ellipsoid the prediction is the squeezed-cylinder limit (the flat
    cylinder B^n x {0}^q), and the report flags that the target is a limit:
    its rows carry an O(eps) model gap on top of the MC error.
    """
    ts = sorted(float(t) for t in t_grid)
    if not ts:
        raise PreconditionError("empty t grid")
    if isinstance(spec, Ellipsoid):
        predictor = minkowski_polynomial(Adjoint(Ball(spec.n), spec.q))
        is_limit = True
    else:
        predictor = minkowski_polynomial(spec)
        is_limit = False
    pad = ts[-1]
    rows = []
    for t in ts:
        est = tube_volume_estimate(spec, t, samples, seed, box_padding=pad)
        predicted = poly_float(predictor, t)
        z = (est.value - predicted) / est.std_error if est.std_error > 0 else float("inf")
        rows.append(ComparisonRow(t, est.value, est.std_error, predicted, z))
    body = sampleable(spec)
    return ComparisonReport(body.name, tuple(rows), is_limit, samples, seed)
