"""Root location: stability certificates, numeric roots, and inequalities.

Two notions are decided here for real polynomials:

* *dissipative* — every root in the open left half-plane;
* *conservative* — every root purely imaginary and simple.

The exact certificates are Routh-Hurwitz determinant chains.  Inside this
module polynomials are re-indexed in descending order (a_0 is the leading
coefficient), which is the classical layout of the Hurwitz matrix
H[i][j] = a_{2j - i + 1}; everywhere else in the package coefficients ascend.
Determinants are computed exactly over Q[sqrt(pi)] by fraction-free
elimination; a monomial-scaling fast path reduces the structured matrices
that arise from ball/cube/cylinder bodies to integer determinants.  Signs of
the exact values are decided by interval arithmetic, never by floats.

The numeric route (simultaneous-iteration root finding at configurable
precision, with an exact square-free split when clusters are detected) is
kept independent of the certificates; ``classify`` runs both and raises
:class:`ConsistencyError` if they ever disagree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import sympy

from .bodies import CrossMeasures
from .errors import ConsistencyError, PreconditionError
from .polynomials import ExactPoly, derivative
from .scalars import (
    ONE,
    ZERO,
    PiHalfValue,
    as_value,
    exact_div,
    sign_and_float,
    to_mpf,
)

# ---------------------------------------------------------------------------
# exact leading principal minors
# ---------------------------------------------------------------------------


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free integer determinant with partial pivoting."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            for r in range(col + 1, n):
                if m[r][col]:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[-1][-1]


def _ring_det(rows: list[list[PiHalfValue]]) -> PiHalfValue:
    """Fraction-free determinant over Q[sqrt(pi)] (Bareiss with pivoting)."""
    n = len(rows)
    if n == 0:
        return ONE
    m = [row[:] for row in rows]
    sign = 1
    prev = ONE
    for col in range(n - 1):
        if m[col][col].is_zero:
            for r in range(col + 1, n):
                if not m[r][col].is_zero:
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return ZERO
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                num = m[r][c] * m[col][col] - m[r][col] * m[col][c]
                m[r][c] = exact_div(num, prev)
            m[r][col] = ZERO
        prev = m[col][col]
    det = m[-1][-1]
    return det if sign == 1 else -det


def _monomial_labels(matrix, size):
    """Try to write the pi-exponent of every nonzero entry as r_i + c_j.

    Succeeding means every leading minor factors as a rational determinant
    times a single power of sqrt(pi), so integer elimination suffices.
    Returns (r, c, Q) with Q the rational coefficient matrix, or None.
    """
    exps: list[list[int | None]] = [[None] * size for _ in range(size)]
    q_mat = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            x = matrix[i][j]
            if x.is_zero:
                continue
            if not x.is_monomial:
                return None
            m, q = x.monomial()
            exps[i][j] = m
            q_mat[i][j] = q
    r: list[int | None] = [None] * size
    c: list[int | None] = [None] * size
    for start in range(size):
        if r[start] is not None:
            continue
        r[start] = 0
        stack: list[tuple[str, int]] = [("row", start)]
        while stack:
            kind, idx = stack.pop()
            if kind == "row":
                for j in range(size):
                    e = exps[idx][j]
                    if e is None:
                        continue
                    want = e - r[idx]  # type: ignore[operator]
                    if c[j] is None:
                        c[j] = want
                        stack.append(("col", j))
                    elif c[j] != want:
                        return None
            else:
                for i in range(size):
                    e = exps[i][idx]
                    if e is None:
                        continue
                    want = e - c[idx]  # type: ignore[operator]
                    if r[i] is None:
                        r[i] = want
                        stack.append(("row", i))
                    elif r[i] != want:
                        return None
    rr = [x if x is not None else 0 for x in r]
    cc = [x if x is not None else 0 for x in c]
    return rr, cc, q_mat


def exact_leading_minors(matrix: list[list[PiHalfValue]], indices: Sequence[int]) -> list[PiHalfValue]:
    """Leading principal minors (1-based sizes in ``indices``), exactly."""
    if not indices:
        return []
    size = max(indices)
    if size > len(matrix) or any(len(row) < size for row in matrix):
        raise PreconditionError("matrix smaller than the largest requested minor")
    if min(indices) < 1:
        raise PreconditionError("minor indices are 1-based")

    labels = _monomial_labels(matrix, size)
    if labels is not None:
        r, c, q_mat = labels
        dens = [math.lcm(*(q.denominator for q in row[:size])) if size else 1 for row in q_mat]
        z = [[int(q_mat[i][j] * dens[i]) for j in range(size)] for i in range(size)]
        out = []
        for k in indices:
            det = _int_det([row[:k] for row in z[:k]])
            den = math.prod(dens[:k])
            if det == 0:
                out.append(ZERO)
                continue
            exp = sum(r[:k]) + sum(c[:k])
            if exp < 0:  # pragma: no cover - impossible for ring-valued minors
                raise ConsistencyError("negative pi-exponent for a nonzero minor")
            out.append(PiHalfValue.pi_power(exp, Fraction(det, den)))
        return out
    return [_ring_det([row[:k] for row in matrix[:k]]) for k in indices]


# ---------------------------------------------------------------------------
# Hurwitz chains
# ---------------------------------------------------------------------------


def _descending(p: ExactPoly) -> list[PiHalfValue]:
    return [p.coeff(p.degree - i) for i in range(p.degree + 1)]


def hurwitz_matrix(p: ExactPoly) -> list[list[PiHalfValue]]:
    """The n x n Hurwitz matrix, a_0 = leading coefficient."""
    n = p.degree
    if n < 1:
        raise PreconditionError("polynomial must have degree >= 1")
    a = _descending(p)

    def entry(i: int, j: int) -> PiHalfValue:
        k = 2 * (j + 1) - (i + 1)
        return a[k] if 0 <= k <= n else ZERO

    return [[entry(i, j) for j in range(n)] for i in range(n)]


def hurwitz_determinants(p: ExactPoly, indices: Sequence[int] | None = None) -> list[PiHalfValue]:
    """Delta_1..Delta_n (or a subset) for a polynomial with positive coefficients."""
    n = p.degree
    if n < 1:
        raise PreconditionError("polynomial must have degree >= 1")
    for k in range(n + 1):
        if sign_and_float(p.coeff(k))[0] <= 0:
            raise PreconditionError(
                "the determinant chain needs strictly positive coefficients; "
                f"coefficient of t^{k} is not positive"
            )
    idx = list(indices) if indices is not None else list(range(1, n + 1))
    if any(k < 1 or k > n for k in idx):
        raise PreconditionError("determinant indices must lie in 1..degree")
    return exact_leading_minors(hurwitz_matrix(p), idx)


def lienard_chipart_indices(n: int) -> list[int]:
    """The even-indexed subset that suffices given positive coefficients."""
    return [k for k in range(2, n + 1, 2)] or [1]


def is_even_polynomial(p: ExactPoly) -> bool:
    return all(c.is_zero for k, c in enumerate(p.coeffs) if k % 2 == 1)


def conservativity_determinants(w: ExactPoly, indices: Sequence[int] | None = None) -> list[PiHalfValue]:
    """Determinant chain deciding that an even polynomial has only purely
    imaginary simple roots: the Hurwitz chain of W + W'."""
    n = w.degree
    if n < 2 or n % 2 != 0:
        raise PreconditionError("conservativity needs an even polynomial of degree >= 2")
    if not is_even_polynomial(w):
        raise PreconditionError("conservativity needs an even polynomial")
    for k in range(0, n + 1, 2):
        if sign_and_float(w.coeff(k))[0] <= 0:
            raise PreconditionError(f"coefficient of t^{k} must be strictly positive")
    return hurwitz_determinants(w + derivative(w), indices)


# ---------------------------------------------------------------------------
# numeric roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumericRoots:
    roots: tuple[complex, ...]
    residual: float
    precision_bits: int


_SY_Y, _SY_T = sympy.symbols("y t")


def _poly_to_sympy(p: ExactPoly):
    expr = sympy.Integer(0)
    for k, c in enumerate(p.coeffs):
        if c.is_zero:
            continue
        s = sympy.Integer(0)
        for m, q in c.terms:
            s += sympy.Rational(q.numerator, q.denominator) * _SY_Y**m
        expr += s * _SY_T**k
    return expr


def _value_from_sympy(expr) -> PiHalfValue:
    poly = sympy.Poly(sympy.expand(expr), _SY_Y)
    terms = {}
    for (m,), q in poly.terms():
        qq = sympy.Rational(q)
        terms[m] = Fraction(int(qq.p), int(qq.q))
    return PiHalfValue(terms)


def squarefree_factors(p: ExactPoly) -> list[tuple[ExactPoly, int]]:
    """Exact square-free decomposition (factors with positive t-degree)."""
    poly = sympy.Poly(_poly_to_sympy(p), _SY_T, _SY_Y, domain="QQ")
    _, factors = sympy.sqf_list(poly)
    out = []
    for f, mult in factors:
        f_t = sympy.Poly(f.as_expr(), _SY_T)
        if f_t.degree() < 1:
            continue
        coeffs = [_value_from_sympy(c) for c in reversed(f_t.all_coeffs())]
        out.append((ExactPoly(coeffs), int(mult)))
    return out


def _mp_coeffs_desc(p: ExactPoly, prec: int):
    return [to_mpf(c, prec) for c in reversed(p.coeffs)]


def _polyroots(p: ExactPoly, prec: int):
    with mpmath.mp.workprec(prec):
        coeffs = _mp_coeffs_desc(p, prec)
        roots, err = mpmath.mp.polyroots(
            coeffs, maxsteps=200, extraprec=prec // 2, error=True
        )
        return [mpmath.mpc(r) for r in roots], float(err)


def _residual(p: ExactPoly, roots, prec: int) -> float:
    if not roots:
        return 0.0
    with mpmath.mp.workprec(prec):
        scale = max(abs(to_mpf(c, prec)) for c in p.coeffs)
        worst = mpmath.mpf(0)
        for r in roots:
            acc = mpmath.mpc(0)
            for c in reversed(p.coeffs):
                acc = acc * r + to_mpf(c, prec)
            denom = scale * max(1.0, abs(r)) ** p.degree
            worst = max(worst, abs(acc) / denom)
        return float(worst)


def numeric_roots(p: ExactPoly, precision_bits: int = 256) -> NumericRoots:
    """All complex roots (with multiplicity), simultaneous-iteration based.

    If the direct iteration reports poor accuracy — the signature of root
    clusters or genuine multiplicity — the polynomial is split into exact
    square-free factors first, so multiple roots are recovered at full
    precision with their multiplicities.
    """
    if p.degree < 1:
        raise PreconditionError("numeric_roots needs degree >= 1")
    prec = max(64, precision_bits)
    try:
        roots, err = _polyroots(p, prec)
    except mpmath.libmp.NoConvergence:
        roots, err = None, math.inf
    if roots is not None and err < 2.0 ** (-prec / 4):
        out = roots
    else:
        out = []
        for factor, mult in squarefree_factors(p):
            if factor.degree == 1:
                # exact root -c0/c1, evaluate in high precision
                with mpmath.mp.workprec(prec):
                    root = [-to_mpf(factor.coeff(0), prec) / to_mpf(factor.coeff(1), prec)]
                froots = [mpmath.mpc(root[0])]
            else:
                froots, _ = _polyroots(factor, prec)
            out.extend(r for r in froots for _ in range(mult))
    out_sorted = sorted(out, key=lambda z: (float(z.real), float(z.imag)))
    res = _residual(p, out_sorted, prec)
    return NumericRoots(
        tuple(complex(float(r.real), float(r.imag)) for r in out_sorted),
        res,
        prec,
    )


# ---------------------------------------------------------------------------
# Hermite-Biehler
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HermiteBiehlerReport:
    even_roots: tuple[float, ...]
    odd_roots: tuple[float, ...]
    parts_conservative: bool
    interlacing: bool
    dissipative: bool


def _compressed(m: ExactPoly, parity: int) -> ExactPoly:
    """The polynomial in s = t^2 built from every other coefficient."""
    return ExactPoly([m.coeff(k) for k in range(parity, m.degree + 1, 2)])


def _real_negative_simple(p: ExactPoly, precision_bits: int, tol: float):
    """Roots of p (in the compressed variable s = t^2), if all are real,
    strictly negative and simple; otherwise (None, False)."""
    if p.degree < 1:
        return (), True
    nr = numeric_roots(p, precision_bits)
    vals = []
    for z in nr.roots:
        scale = 1.0 + abs(z)
        if abs(z.imag) > tol * scale or z.real >= -tol * scale:
            return (), False
        vals.append(z.real)
    vals.sort(reverse=True)  # closest to zero first
    for a, b in zip(vals, vals[1:]):
        if a - b <= tol * (1.0 + abs(a)):
            return (), False
    return tuple(vals), True


def hermite_biehler_check(
    m: ExactPoly, precision_bits: int = 256, tol: float = 1e-9
) -> HermiteBiehlerReport:
    """Even/odd split test: dissipative iff both parts have real negative
    simple roots (in s = t^2) that strictly interlace, even part leading."""
    if m.degree < 1:
        raise PreconditionError("degree >= 1 required")
    if sign_and_float(m.coeff(0))[0] <= 0 or sign_and_float(m.coeff(1))[0] <= 0:
        raise PreconditionError("constant and linear coefficients must be positive")
    e_poly = _compressed(m, 0)
    o_poly = _compressed(m, 1)

    e_roots, e_ok = _real_negative_simple(e_poly, precision_bits, tol)
    o_roots, o_ok = _real_negative_simple(o_poly, precision_bits, tol)
    parts_ok = e_ok and o_ok

    interlace = False
    if parts_ok and len(e_roots) in (len(o_roots), len(o_roots) + 1):
        seq = [
            e_roots[idx // 2] if idx % 2 == 0 else o_roots[idx // 2]
            for idx in range(len(e_roots) + len(o_roots))
        ]
        interlace = all(a - b > tol * (1.0 + abs(a)) for a, b in zip(seq, seq[1:]))
    return HermiteBiehlerReport(e_roots, o_roots, parts_ok, interlace, parts_ok and interlace)


# ---------------------------------------------------------------------------
# inequality families on cross-sectional measures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InequalityRow:
    name: str
    sign: int
    value_approx: float

    @property
    def holds(self) -> bool:
        return self.sign >= 0

    @property
    def strict(self) -> bool:
        return self.sign > 0


def _row(name: str, diff: PiHalfValue) -> InequalityRow:
    s, f = sign_and_float(diff)
    return InequalityRow(name, s, f)


def af_inequalities(cm: CrossMeasures) -> list[InequalityRow]:
    """Log-concavity chains of the measures: the quadratic step
    v_k^2 >= v_{k-1} v_{k+1}, the distance-two consequence
    v_k^2 >= v_{k-2} v_{k+2}, and the product form
    v_k v_{k+1} >= v_{k-1} v_{k+2}."""
    v = cm.v
    n = cm.n
    rows = []
    for k in range(1, n):
        rows.append(_row(f"v{k}^2 >= v{k - 1}*v{k + 1}", v[k] * v[k] - v[k - 1] * v[k + 1]))
    for k in range(2, n - 1):
        rows.append(_row(f"v{k}^2 >= v{k - 2}*v{k + 2}", v[k] * v[k] - v[k - 2] * v[k + 2]))
    for k in range(1, n - 1):
        rows.append(_row(f"v{k}*v{k + 1} >= v{k - 1}*v{k + 2}", v[k] * v[k + 1] - v[k - 1] * v[k + 2]))
    return rows


def low_dim_inequalities(cm: CrossMeasures, n: int) -> list[InequalityRow]:
    """The explicit strict inequalities equivalent to dissipativity in
    ambient dimensions 3, 4, 5, plus the index-infinity (Weyl) reductions."""
    if n != cm.n:
        raise PreconditionError("dimension argument must match the measures")
    v = cm.v
    if n == 3:
        return [_row("9*v1*v2 > v0*v3", 9 * v[1] * v[2] - v[0] * v[3])]
    if n == 4:
        return [
            _row("6*v1*v2 > v0*v3", 6 * v[1] * v[2] - v[0] * v[3]),
            _row(
                "6*v1*v2*v3 > v0*v3^2 + v1^2*v4",
                6 * v[1] * v[2] * v[3] - v[0] * v[3] * v[3] - v[1] * v[1] * v[4],
            ),
            _row("3*v2^2 > v0*v4", 3 * v[2] * v[2] - v[0] * v[4]),
        ]
    if n == 5:
        delta4 = _measures_delta(v, 5, 4)
        return [
            _row("5*v1*v2 > v0*v3", 5 * v[1] * v[2] - v[0] * v[3]),
            _row(
                "100*v1*v2*v3 + v0*v1*v5 > 20*v0*v3^2 + 25*v1^2*v4",
                100 * v[1] * v[2] * v[3]
                + v[0] * v[1] * v[5]
                - 20 * v[0] * v[3] * v[3]
                - 25 * v[1] * v[1] * v[4],
            ),
            _row("Delta_4 > 0", delta4),
            _row("5*v3^2 > 3*v1*v5", 5 * v[3] * v[3] - 3 * v[1] * v[5]),
        ]
    raise PreconditionError("explicit inequality tables exist for n in {3, 4, 5}")


def _measures_delta(v: Sequence[PiHalfValue], n: int, k: int) -> PiHalfValue:
    """Delta_k of the polynomial with descending coefficients C(n, j) v_j."""
    p = ExactPoly([as_value(v[n - i]) * math.comb(n, n - i) for i in range(n + 1)])
    return exact_leading_minors(hurwitz_matrix(p), [k])[0]


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DeterminantEntry:
    index: int
    sign: int
    value_approx: float


@dataclass(frozen=True)
class RootClassification:
    label: str
    roots: tuple[complex, ...]
    determinants: tuple[DeterminantEntry, ...]
    interlacing: bool
    residual: float
    certificate: str

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "roots": [[z.real, z.imag] for z in self.roots],
            "determinants": [
                {"index": d.index, "sign": d.sign, "value_approx": d.value_approx}
                for d in self.determinants
            ],
            "interlacing": self.interlacing,
            "residual": self.residual,
            "certificate": self.certificate,
        }


def _positive_coefficients(p: ExactPoly) -> bool:
    return all(sign_and_float(p.coeff(k))[0] > 0 for k in range(p.degree + 1))


def _numeric_dissipative(roots: Iterable[complex], tol: float) -> bool:
    return all(z.real < -tol * (1.0 + abs(z)) for z in roots)


def _numeric_conservative(roots: Sequence[complex], tol: float) -> bool:
    if any(abs(z.real) > tol * (1.0 + abs(z)) for z in roots):
        return False
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            gap = abs(roots[i] - roots[j])
            if gap <= tol * (1.0 + abs(roots[i])):
                return False
    return True


def classify(
    p: ExactPoly,
    mode: str,
    tol: float = 1e-9,
    precision_bits: int = 256,
    lienard_chipart: bool = False,
) -> RootClassification:
    """Label a polynomial against ``mode`` ("dissipative" or "conservative").

    Runs the numeric root route always; when the coefficient signs admit the
    exact determinant certificate it is computed as well, and the two verdicts
    must agree (otherwise :class:`ConsistencyError`).  The Hermite-Biehler
    split is cross-checked whenever its preconditions hold.
    """
    if mode not in ("dissipative", "conservative"):
        raise PreconditionError(f"unknown mode {mode!r}")
    if p.degree < 1:
        raise PreconditionError("classify needs degree >= 1")
    if sign_and_float(p.coeff(p.degree))[0] < 0:
        p = -p

    nr = numeric_roots(p, precision_bits)
    diss = _numeric_dissipative(nr.roots, tol)
    cons = _numeric_conservative(nr.roots, tol)
    label = "dissipative" if diss else ("conservative" if cons else "neither")

    entries: tuple[DeterminantEntry, ...] = ()
    certificate = "none"
    cert_positive: bool | None = None

    if mode == "dissipative":
        if _positive_coefficients(p):
            idx = lienard_chipart_indices(p.degree) if lienard_chipart else list(range(1, p.degree + 1))
            dets = hurwitz_determinants(p, idx)
            pairs = [sign_and_float(d) for d in dets]
            entries = tuple(DeterminantEntry(i, s, f) for i, (s, f) in zip(idx, pairs))
            cert_positive = all(s > 0 for s, _ in pairs)
            certificate = "hurwitz (even subset)" if lienard_chipart else "hurwitz"
        elif diss:
            raise ConsistencyError(
                "numeric roots in the left half-plane but a coefficient is not positive"
            )
    else:
        if is_even_polynomial(p) and p.degree >= 2 and _positive_coefficients_even(p):
            idx = (
                lienard_chipart_indices(p.degree)
                if lienard_chipart
                else list(range(1, p.degree + 1))
            )
            dets = conservativity_determinants(p, idx)
            pairs = [sign_and_float(d) for d in dets]
            entries = tuple(DeterminantEntry(i, s, f) for i, (s, f) in zip(idx, pairs))
            cert_positive = all(s > 0 for s, _ in pairs)
            certificate = "shifted-hurwitz"

    interlacing = False
    hb: HermiteBiehlerReport | None = None
    if mode == "dissipative":
        if sign_and_float(p.coeff(0))[0] > 0 and sign_and_float(p.coeff(1))[0] > 0:
            hb = hermite_biehler_check(p, precision_bits, tol)
            interlacing = hb.interlacing
    else:
        if cert_positive is not None:
            hb = hermite_biehler_check(p + derivative(p), precision_bits, tol)
            interlacing = hb.interlacing

    if cert_positive is not None:
        numeric_verdict = label == mode
        if cert_positive != numeric_verdict:
            raise ConsistencyError(
                f"certificate ({cert_positive}) and numeric verdict ({numeric_verdict}) disagree"
            )
        if hb is not None and hb.dissipative != cert_positive:
            raise ConsistencyError("Hermite-Biehler split disagrees with the determinant certificate")

    return RootClassification(label, nr.roots, entries, interlacing, nr.residual, certificate)


def _positive_coefficients_even(p: ExactPoly) -> bool:
    return all(sign_and_float(p.coeff(k))[0] > 0 for k in range(0, p.degree + 1, 2))


def hurwitz_verdict(p: ExactPoly, lienard_chipart: bool = True) -> bool:
    """Certificate-only dissipativity check, cheap enough for bulk sweeps.

    No numeric roots are computed; a polynomial failing the positive
    coefficient precondition is simply not dissipative.
    """
    if p.degree < 1:
        raise PreconditionError("degree >= 1 required")
    if sign_and_float(p.coeff(p.degree))[0] < 0:
        p = -p
    if not _positive_coefficients(p):
        return False
    idx = lienard_chipart_indices(p.degree) if lienard_chipart else list(range(1, p.degree + 1))
    dets = hurwitz_determinants(p, idx)
    return all(sign_and_float(d)[0] > 0 for d in dets)


# ---------------------------------------------------------------------------
# counterexample search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    n: int
    r: Fraction
    cliff_depth: Fraction
    cliff_start: int | None
    failing_index: int
    determinant_signs: tuple[int, ...]
    v: tuple[Fraction, ...]

    def to_json(self) -> dict:
        cliff = (
            None
            if self.cliff_start is None
            else {
                "depth": f"{self.cliff_depth.numerator}/{self.cliff_depth.denominator}",
                "start": self.cliff_start,
            }
        )
        return {
            "n": self.n,
            "r": f"{self.r.numerator}/{self.r.denominator}",
            "cliff": cliff,
            "failing_index": self.failing_index,
            "determinant_signs": list(self.determinant_signs),
            "v": [f"{x.numerator}/{x.denominator}" for x in self.v],
        }


def _af_ok(v: Sequence[Fraction]) -> bool:
    return all(v[k] * v[k] >= v[k - 1] * v[k + 1] for k in range(1, len(v) - 1))


def default_r_grid() -> list[Fraction]:
    return [
        Fraction(99, 100),
        Fraction(9, 10),
        Fraction(3, 4),
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 10),
        Fraction(1, 100),
    ]


def counterexample_search(
    n: int,
    r_values: Sequence[Fraction] | None = None,
    cliff_depths: Sequence[Fraction] | None = None,
    cliff_starts: Sequence[int] | None = None,
    budget: int = 500,
    max_index: int = 5,
) -> Witness | None:
    """Search log-concave sequences for a failure of the early minor chain.

    The candidate family is v_k = r^(k^2), optionally perturbed by a second
    quadratic drop s^((k-j)^2) applied from position j on (a "cliff": the
    sequence decays gently, then collapses).  Both factors have concave
    logarithm, so every candidate satisfies the log-concavity inequalities;
    admissibility is still re-checked exactly.  For each admissible candidate
    the minors Delta_1..Delta_max_index of the associated coefficient
    sequence a_k = C(n, k) v_k are evaluated exactly; the first candidate
    with a non-positive minor is returned.  None means the grid or the
    budget was exhausted with every minor positive.
    """
    if n < 2:
        raise PreconditionError("ambient dimension must be >= 2")
    rs = list(r_values) if r_values is not None else default_r_grid()
    depths = (
        list(cliff_depths)
        if cliff_depths is not None
        else [Fraction(1, 10), Fraction(1, 100)]
    )
    starts = list(cliff_starts) if cliff_starts is not None else [4, 5, 6, 7]
    candidates: list[tuple[Fraction, Fraction, int | None]] = []
    for r in rs:
        candidates.append((r, Fraction(1), None))
        for s in depths:
            for j in starts:
                if j < n:
                    candidates.append((r, s, j))

    checked = 0
    top = min(max_index, n)
    for r, s, j in candidates:
        if not 0 < r < 1 or not 0 < s <= 1:
            continue
        if checked >= budget:
            return None
        checked += 1
        v = [
            r ** (k * k) * (s ** ((k - j) ** 2) if j is not None and k >= j else 1)
            for k in range(n + 1)
        ]
        if not _af_ok(v):
            continue
        p = ExactPoly([as_value(v[n - i]) * math.comb(n, n - i) for i in range(n + 1)])
        minors = exact_leading_minors(hurwitz_matrix(p), list(range(1, top + 1)))
        signs = tuple(sign_and_float(d)[0] for d in minors)
        for k, sgn in enumerate(signs, start=1):
            if sgn <= 0:
                return Witness(n, r, s, j, k, signs, tuple(v))
    return None
