"""Command-line interface.

One executable, ``tubepoly``, with a subcommand per workflow: exact tube
polynomials, boundary-measure polynomials and their index family, root
classification, truncated-series sections and degree scans, inequality
checks, the structured counterexample search, Monte-Carlo volume checks,
and the flat-cylinder reduction identity.

Machine output (``--format json|csv``) is byte-identical across runs for
the same inputs; every JSON document carries ``"schema": 1``.  The default
``--format table`` is meant for humans.  When ``--out`` is given the report
is written to that path and a PNG figure with the same stem is rendered
next to it (suppress with ``--no-figure``).

Exit codes: 0 success, 2 usage or unsupported-input errors, 3 internal
cross-check disagreement (a bug, not bad input).

Body shorthand (``--body``)::

    ball:3                        unit ball in R^3
    cube:2                        [-1,1]^2
    adjoint:ball:2,q=1            B^2 x {0}^1
    product:ball:2;cube:1         Cartesian product
    ellipsoid:2,q=1,eps=1/100     squeezed ellipsoid (Monte-Carlo only)
    measures:1,4,6,4,1            explicit cross-measures v_0..v_n

Series shorthand (``--series``)::

    madjoint:2      flat-cylinder volume family, codimension 2
    wball:3         boundary family of the ball, index 3
    wball:inf       ... limiting index
    wballcyl:5  wcube:2  wcubecyl:inf   the other boundary families
    ml              the quadratic-ratio comparison series
"""
from __future__ import annotations

import csv
import decimal
import functools
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import click

from . import __version__, entire, figures, mc
from .bodies import (
    Adjoint,
    Ball,
    BodySpec,
    CrossMeasures,
    Cube,
    Ellipsoid,
    FromMeasures,
    Product,
    ambient_dimension,
    minkowski_polynomial,
    polynomial_to_measures,
)
from .errors import ConsistencyError, PreconditionError, UnsupportedExactError
from .polynomials import ExactPoly, jensen_polynomial
from .rootloc import (
    af_inequalities,
    classify,
    counterexample_search,
    low_dim_inequalities,
    numeric_roots,
)
from .scalars import PiHalfValue, sign_and_float
from .weyl import adjoint_weyl_reduction, weyl_coefficients, weyl_index_p

SCHEMA_VERSION = 1


# -- shared parsing --------------------------------------------------------


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"not a rational number: {text!r}") from exc


def parse_body(text: str) -> BodySpec:
    """Parse the ``--body`` shorthand; raises UsageError on malformed input."""
    text = text.strip()
    head, sep, rest = text.partition(":")
    try:
        if head == "ball" and sep:
            return Ball(int(rest))
        if head == "cube" and sep:
            return Cube(int(rest))
        if head == "adjoint" and sep:
            base_text, qsep, q_text = rest.rpartition(",q=")
            if not qsep:
                raise click.UsageError(f"adjoint needs ',q=N': {text!r}")
            return Adjoint(parse_body(base_text), int(q_text))
        if head == "product" and sep:
            left, psep, right = rest.partition(";")
            if not psep:
                raise click.UsageError(f"product needs ';' between factors: {text!r}")
            return Product(parse_body(left), parse_body(right))
        if head == "ellipsoid" and sep:
            parts = rest.split(",")
            if len(parts) != 3 or not parts[1].startswith("q=") or not parts[2].startswith("eps="):
                raise click.UsageError(f"ellipsoid needs 'N,q=Q,eps=E': {text!r}")
            return Ellipsoid(int(parts[0]), int(parts[1][2:]), _parse_fraction(parts[2][4:]))
        if head == "measures" and sep:
            vals = tuple(
                PiHalfValue.from_rational(_parse_fraction(x)) for x in rest.split(",")
            )
            return FromMeasures(CrossMeasures(len(vals) - 1, vals))
    except (ValueError, PreconditionError) as exc:
        raise click.UsageError(f"bad body {text!r}: {exc}") from exc
    raise click.UsageError(f"unknown body shorthand: {text!r}")


def body_label(spec: BodySpec) -> str:
    if isinstance(spec, Ball):
        return f"ball:{spec.n}"
    if isinstance(spec, Cube):
        return f"cube:{spec.n}"
    if isinstance(spec, Adjoint):
        return f"adjoint:{body_label(spec.base)},q={spec.q}"
    if isinstance(spec, Product):
        return f"product:{body_label(spec.left)};{body_label(spec.right)}"
    if isinstance(spec, Ellipsoid):
        return f"ellipsoid:{spec.n},q={spec.q},eps={spec.eps}"
    if isinstance(spec, FromMeasures):
        return "measures:" + ",".join(value_text(x) for x in spec.measures.v)
    raise TypeError(f"not a body spec: {spec!r}")


_SERIES_FAMILIES = {
    "madjoint": entire.m_ball_adjoint,
    "wball": entire.w_ball,
    "wballcyl": entire.w_ball_cyl,
    "wcube": entire.w_cube,
    "wcubecyl": entire.w_cube_cyl,
}


def parse_series(text: str):
    """Parse the ``--series`` shorthand into a SeriesSpec."""
    text = text.strip()
    if text == "ml":
        return entire.mittag_leffler()
    head, sep, rest = text.partition(":")
    if head == "madjoint" and sep:
        try:
            return entire.m_ball_adjoint(int(rest))
        except (ValueError, PreconditionError) as exc:
            raise click.UsageError(f"bad series {text!r}: {exc}") from exc
    if head in _SERIES_FAMILIES and head != "madjoint" and sep:
        if rest in ("inf", "infinity"):
            index = None
        else:
            try:
                index = int(rest)
            except ValueError as exc:
                raise click.UsageError(f"bad series index {rest!r}") from exc
        try:
            return _SERIES_FAMILIES[head](index)
        except PreconditionError as exc:
            raise click.UsageError(f"bad series {text!r}: {exc}") from exc
    raise click.UsageError(f"unknown series shorthand: {text!r}")


def _parse_index(text: str):
    if text in ("inf", "infinity"):
        return "inf"
    try:
        return int(text)
    except ValueError as exc:
        raise click.UsageError(f"index must be an integer or 'inf': {text!r}") from exc


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad number list: {text!r}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad integer list: {text!r}") from exc


# -- shared output ---------------------------------------------------------


def value_text(x: PiHalfValue) -> str:
    """Human-readable exact value, e.g. '3/4*pi' or '2 + 1/2*pi^(1/2)'."""
    r = repr(x)
    return r[len("PiHalfValue(") : -1]


def _fmt_cell(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return format(x, ".10g")
    return str(x)


def _render_table(header_lines: Sequence[str], columns: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = io.StringIO()
    for line in header_lines:
        out.write(line + "\n")
    if columns:
        cells = [[_fmt_cell(v) for v in row] for row in rows]
        widths = [
            max(len(columns[i]), max((len(r[i]) for r in cells), default=0))
            for i in range(len(columns))
        ]
        out.write("  ".join(c.ljust(widths[i]) for i, c in enumerate(columns)).rstrip() + "\n")
        out.write("  ".join("-" * w for w in widths) + "\n")
        for r in cells:
            out.write("  ".join(r[i].ljust(widths[i]) for i in range(len(columns))).rstrip() + "\n")
    return out.getvalue()


def _render_csv(columns: Sequence[str], rows: Sequence[Sequence]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([repr(v) if isinstance(v, float) else _fmt_cell(v) for v in row])
    return out.getvalue()


def emit(
    payload: dict,
    columns: Sequence[str],
    rows: Sequence[Sequence],
    fmt: str,
    out: str | None,
    header_lines: Sequence[str] = (),
    figure: Callable[[Path], None] | None = None,
    no_figure: bool = False,
) -> None:
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, **payload}
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        text = _render_csv(columns, rows)
    else:
        text = _render_table(header_lines, columns, rows)
    if out:
        path = Path(out)
        path.write_text(text)
        if figure is not None and not no_figure:
            figure(path.with_suffix(".png"))
    else:
        click.echo(text, nl=False)


def _poly_json(p: ExactPoly) -> dict:
    return {
        "degree": p.degree,
        "coefficients": [
            {"k": k, "text": value_text(p.coeff(k)), "value": sign_and_float(p.coeff(k))[1]}
            for k in range(p.degree + 1)
        ],
    }


def _poly_rows(p: ExactPoly) -> list[list]:
    return [
        [k, value_text(p.coeff(k)), sign_and_float(p.coeff(k))[1]]
        for k in range(p.degree + 1)
    ]


def _curve_figure(p: ExactPoly, title: str, t_max: float = 3.0):
    ts = [i * t_max / 160 for i in range(161)]
    ys = [mc.poly_float(p, t) for t in ts]

    def draw(path: Path) -> None:
        figures.save_curve(ts, ys, path, title)

    return draw


def guarded(fn):
    """Map library errors onto the CLI exit-code contract."""

    @functools.wraps(fn)
    def inner(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ConsistencyError as exc:
            click.echo(f"consistency failure: {exc}", err=True)
            sys.exit(3)
        except (PreconditionError, UnsupportedExactError) as exc:
            raise click.UsageError(str(exc)) from exc

    return inner


def _format_option(fn):
    fn = click.option(
        "--format",
        "fmt",
        type=click.Choice(["table", "json", "csv"]),
        default="table",
        show_default=True,
        help="Output format.",
    )(fn)
    fn = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report to this path (a PNG figure is rendered next to it).")(fn)
    fn = click.option("--no-figure", is_flag=True, default=False, help="Skip the PNG figure even when --out is set.")(fn)
    return fn


def _surface_setup(body_text: str):
    """Resolve the boundary-surface convention for --body.

    ball:N / cube:N name the N-dimensional boundary of the (N+1)-solid, so
    ball:9 is the 9-sphere.  Composite specs name the solid itself and the
    surface is its boundary (dimension = ambient - 1).
    """
    spec = parse_body(body_text)
    if isinstance(spec, Ball):
        solid: BodySpec = Ball(spec.n + 1)
        surface_dim = spec.n
    elif isinstance(spec, Cube):
        solid = Cube(spec.n + 1)
        surface_dim = spec.n
    else:
        solid = spec
        surface_dim = ambient_dimension(spec) - 1
    return spec, solid, surface_dim, minkowski_polynomial(solid)


def _measures_from_options(body: str | None, measures: str | None) -> CrossMeasures:
    if (body is None) == (measures is None):
        raise click.UsageError("give exactly one of --body or --measures")
    if measures is not None:
        vals = tuple(
            PiHalfValue.from_rational(_parse_fraction(x)) for x in measures.split(",")
        )
        try:
            return CrossMeasures(len(vals) - 1, vals)
        except PreconditionError as exc:
            raise click.UsageError(str(exc)) from exc
    spec = parse_body(body)
    m = minkowski_polynomial(spec)
    return polynomial_to_measures(m, ambient_dimension(spec))


# -- the command group -----------------------------------------------------


@click.group()
@click.version_option(version=__version__, prog_name="tubepoly")
def main() -> None:
    """Exact tube-volume polynomials, their root geometry, and checks."""


@main.command()
@click.option("--body", required=True, help="Body shorthand, e.g. ball:3 or adjoint:ball:2,q=1.")
@_format_option
@guarded
def minkowski(body: str, fmt: str, out: str | None, no_figure: bool) -> None:
    """Exact tube-volume polynomial of a body."""
    spec = parse_body(body)
    m = minkowski_polynomial(spec)
    label = body_label(spec)
    payload = {
        "command": "minkowski",
        "body": label,
        "dimension": ambient_dimension(spec),
        "polynomial": _poly_json(m),
    }
    emit(
        payload,
        ["k", "coefficient", "value"],
        _poly_rows(m),
        fmt,
        out,
        header_lines=[f"body: {label}", f"dimension: {ambient_dimension(spec)}"],
        figure=_curve_figure(m, f"tube volume of {label}"),
        no_figure=no_figure,
    )


@main.command()
@click.option("--body", required=True, help="Surface shorthand; ball:9 is the 9-sphere.")
@click.option("--index", "index_text", default="inf", show_default=True, help="Index p, or 'inf'.")
@click.option("--roots", "want_roots", is_flag=True, default=False, help="Also locate the roots numerically.")
@click.option("--precision", default=256, show_default=True, help="Working precision in bits for root finding.")
@_format_option
@guarded
def weyl(body: str, index_text: str, want_roots: bool, precision: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Boundary-measure coefficients and the index-p polynomial of a surface."""
    spec, solid, surface_dim, m = _surface_setup(body)
    p = _parse_index(index_text)
    kc = weyl_coefficients(m, surface_dim)
    w = weyl_index_p(kc, p)
    payload = {
        "command": "weyl",
        "body": body_label(spec),
        "solid": body_label(solid),
        "surface_dim": surface_dim,
        "index": "inf" if p == "inf" else p,
        "k": [
            {"l": 2 * l, "text": value_text(x), "value": sign_and_float(x)[1]}
            for l, x in enumerate(kc.k)
        ],
        "polynomial": _poly_json(w),
    }
    header = [
        f"surface: boundary of {body_label(solid)} (dimension {surface_dim})",
        f"index: {index_text}",
    ]
    if want_roots:
        nr = numeric_roots(w, precision)
        payload["roots"] = [[z.real, z.imag] for z in nr.roots]
        payload["root_residual"] = nr.residual
        columns = ["re", "im"]
        rows: list[list] = [[z.real, z.imag] for z in nr.roots]
        roots = list(nr.roots)

        def draw(path: Path) -> None:
            figures.save_root_scatter(roots, path, f"roots of W^{index_text} for {body_label(spec)}")

        figure = draw
    else:
        columns = ["l", "k_l", "value"]
        rows = [[2 * l, value_text(x), sign_and_float(x)[1]] for l, x in enumerate(kc.k)]
        figure = _curve_figure(w, f"W^{index_text} for {body_label(spec)}")
    emit(payload, columns, rows, fmt, out, header_lines=header, figure=figure, no_figure=no_figure)


@main.command("classify")
@click.option("--body", required=True, help="Body (dissipative mode) or surface (conservative mode) shorthand.")
@click.option("--mode", type=click.Choice(["dissipative", "conservative"]), required=True)
@click.option("--index", "index_text", default="inf", show_default=True, help="Index p for conservative mode.")
@click.option("--tol", default=1e-9, show_default=True, help="Numeric tolerance for the root verdict.")
@click.option("--precision", default=256, show_default=True, help="Working precision in bits.")
@_format_option
@guarded
def classify_cmd(body: str, mode: str, index_text: str, tol: float, precision: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Classify root locations of the tube or boundary polynomial."""
    if mode == "dissipative":
        spec = parse_body(body)
        poly = minkowski_polynomial(spec)
        target = body_label(spec)
    else:
        spec, solid, surface_dim, m = _surface_setup(body)
        p = _parse_index(index_text)
        poly = weyl_index_p(weyl_coefficients(m, surface_dim), p)
        target = f"W^{index_text} of {body_label(spec)}"
    result = classify(poly, mode, tol=tol, precision_bits=precision)
    payload = {
        "command": "classify",
        "body": body_label(spec),
        "mode": mode,
        "target": target,
        "result": result.to_json(),
        "verdict": result.label == mode,
    }
    header = [
        f"target: {target}",
        f"mode: {mode}",
        f"label: {result.label}",
        f"certificate: {result.certificate}",
        f"verdict: {'pass' if result.label == mode else 'FAIL'}",
    ]
    rows = [[z.real, z.imag] for z in result.roots]
    roots = list(result.roots)

    def draw(path: Path) -> None:
        figures.save_root_scatter(roots, path, f"roots: {target}")

    emit(payload, ["re", "im"], rows, fmt, out, header_lines=header, figure=draw, no_figure=no_figure)


@main.command()
@click.option("--series", "series_text", required=True, help="Series shorthand, e.g. wball:2 or madjoint:1.")
@click.option("--n", "n", type=int, required=True, help="Section degree.")
@_format_option
@guarded
def jensen(series_text: str, n: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Degree-n damped section of a series (root-preserving truncation)."""
    spec = parse_series(series_text)
    if n < 1:
        raise click.UsageError("--n must be at least 1")
    coeffs = entire.taylor_coefficients(spec, n + 1)
    poly = jensen_polynomial(coeffs, n)
    payload = {
        "command": "jensen",
        "series": spec.label(),
        "n": n,
        "polynomial": _poly_json(poly),
    }
    emit(
        payload,
        ["k", "coefficient", "value"],
        _poly_rows(poly),
        fmt,
        out,
        header_lines=[f"series: {spec.label()}", f"section degree: {n}"],
        figure=_curve_figure(poly, f"section n={n} of {spec.label()}", t_max=max(3.0, math.sqrt(n))),
        no_figure=no_figure,
    )


@main.command("series-scan")
@click.option("--series", "series_text", required=True, help="Series shorthand.")
@click.option("--degrees", required=True, help="Comma-separated section degrees, e.g. 20,40,60.")
@click.option(
    "--mode",
    type=click.Choice(["real_axis", "left_half_plane"]),
    default="real_axis",
    show_default=True,
    help="Which root-location property to monitor.",
)
@click.option("--tol", default=1e-9, show_default=True, help="Relative tolerance for violations.")
@_format_option
@guarded
def series_scan(series_text: str, degrees: str, mode: str, tol: float, fmt: str, out: str | None, no_figure: bool) -> None:
    """Scan section degrees for roots escaping the expected region."""
    spec = parse_series(series_text)
    degree_list = _parse_int_list(degrees)
    report = entire.truncation_root_trend(spec, degree_list, mode, tol=tol)
    payload = {"command": "series-scan", **report.to_json()}
    rows = [[row.degree, row.violations, row.max_violation] for row in report.rows]
    ds = [row.degree for row in report.rows]
    counts = [row.violations for row in report.rows]

    def draw(path: Path) -> None:
        figures.save_trend(ds, counts, path, f"escaping roots: {spec.label()} ({mode})")

    emit(
        payload,
        ["degree", "violations", "max_violation"],
        rows,
        fmt,
        out,
        header_lines=[
            f"series: {spec.label()}",
            f"mode: {mode}",
            f"onset: {report.onset_degree if report.onset_degree is not None else 'not observed'}",
        ],
        figure=draw,
        no_figure=no_figure,
    )


@main.command("af-check")
@click.option("--body", default=None, help="Body shorthand; measures are read off its polynomial.")
@click.option("--measures", default=None, help="Comma-separated rational v_0..v_n.")
@_format_option
@guarded
def af_check(body: str | None, measures: str | None, fmt: str, out: str | None, no_figure: bool) -> None:
    """Log-concavity inequality chains for cross-measures."""
    cm = _measures_from_options(body, measures)
    rows_data = af_inequalities(cm)
    _emit_inequalities("af-check", cm, rows_data, fmt, out, no_figure)


@main.command()
@click.option("--body", default=None, help="Body shorthand; measures are read off its polynomial.")
@click.option("--measures", default=None, help="Comma-separated rational v_0..v_n.")
@_format_option
@guarded
def lowdim(body: str | None, measures: str | None, fmt: str, out: str | None, no_figure: bool) -> None:
    """Dimension-specific minor inequalities (ambient dimension 3, 4, or 5)."""
    cm = _measures_from_options(body, measures)
    rows_data = low_dim_inequalities(cm, cm.n)
    _emit_inequalities("lowdim", cm, rows_data, fmt, out, no_figure)


def _emit_inequalities(command: str, cm: CrossMeasures, rows_data, fmt, out, no_figure) -> None:
    payload = {
        "command": command,
        "n": cm.n,
        "rows": [
            {"name": r.name, "holds": r.holds, "strict": r.strict, "value": r.value_approx}
            for r in rows_data
        ],
        "all_hold": all(r.holds for r in rows_data),
    }
    rows = [[r.name, r.holds, r.strict, r.value_approx] for r in rows_data]
    names = [r.name for r in rows_data]
    values = [r.value_approx for r in rows_data]

    def draw(path: Path) -> None:
        figures.save_bars(names, values, path, f"{command} margins (n={cm.n})")

    emit(
        payload,
        ["inequality", "holds", "strict", "margin"],
        rows,
        fmt,
        out,
        header_lines=[f"n: {cm.n}", f"all hold: {'yes' if payload['all_hold'] else 'NO'}"],
        figure=draw,
        no_figure=no_figure,
    )


@main.command()
@click.option("--n", type=int, required=True, help="Ambient dimension to search in.")
@click.option("--budget", default=500, show_default=True, help="Maximum number of candidates.")
@click.option("--max-index", default=5, show_default=True, help="Deepest minor to evaluate.")
@_format_option
@guarded
def counterexample(n: int, budget: int, max_index: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Search log-concave measure sequences for a failing minor."""
    witness = counterexample_search(n, budget=budget, max_index=max_index)
    if witness is None:
        payload = {"command": "counterexample", "n": n, "witness": None}
        emit(payload, ["k", "v_k"], [], fmt, out, header_lines=[f"n: {n}", "witness: none found"])
        return
    payload = {"command": "counterexample", "n": n, "witness": witness.to_json()}
    ctx = decimal.Context(prec=8)
    rows = [
        [k, str(ctx.divide(decimal.Decimal(v.numerator), decimal.Decimal(v.denominator)))]
        for k, v in enumerate(witness.v)
    ]
    # Entries can underflow float(), so take logs on the integer parts.
    logs = [math.log10(v.numerator) - math.log10(v.denominator) for v in witness.v]
    header = [
        f"n: {n}",
        f"r: {witness.r}",
        "cliff: none"
        if witness.cliff_start is None
        else f"cliff: depth {witness.cliff_depth} from k={witness.cliff_start}",
        f"failing minor: {witness.failing_index}",
        f"minor signs: {list(witness.determinant_signs)}",
    ]

    def draw(path: Path) -> None:
        figures.save_sequence(logs, path, f"witness measures, n={n}", "log10 v_k")

    emit(payload, ["k", "v_k"], rows, fmt, out, header_lines=header, figure=draw, no_figure=no_figure)


@main.command("mc-volume")
@click.option("--body", required=True, help="Sampleable body shorthand (dimension <= 8).")
@click.option("--t", "t_text", default="0.1,0.25,0.5", show_default=True, help="Comma-separated tube radii.")
@click.option("--samples", default=1_000_000, show_default=True, help="Monte-Carlo sample count per radius.")
@click.option("--seed", default=0, show_default=True, help="RNG seed (results are reproducible).")
@_format_option
@guarded
def mc_volume(body: str, t_text: str, samples: int, seed: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Monte-Carlo tube volumes against the polynomial prediction."""
    spec = parse_body(body)
    ts = _parse_float_list(t_text)
    if not ts:
        raise click.UsageError("--t needs at least one radius")
    report = mc.compare_oracle(spec, ts, samples=samples, seed=seed)
    payload = {"command": "mc-volume", **report.to_json()}
    rows = [
        [r.t, r.estimate, r.std_error, r.predicted, r.z_score] for r in report.rows
    ]
    ts_sorted = [r.t for r in report.rows]
    ests = [r.estimate for r in report.rows]
    ses = [r.std_error for r in report.rows]
    preds = [r.predicted for r in report.rows]
    title = f"tube volume of {body_label(spec)}"

    def draw(path: Path) -> None:
        figures.save_mc_comparison(ts_sorted, ests, ses, preds, path, title)

    header = [
        f"body: {body_label(spec)}",
        f"samples: {samples}  seed: {seed}",
        "prediction: squeezed-limit polynomial" if report.predicted_is_limit else "prediction: exact polynomial",
        f"max |z|: {format(report.max_abs_z, '.4g')}",
    ]
    emit(
        payload,
        ["t", "estimate", "stderr", "predicted", "z"],
        rows,
        fmt,
        out,
        header_lines=header,
        figure=draw,
        no_figure=no_figure,
    )


@main.command()
@click.option("--body", required=True, help="Base body shorthand (the solid V).")
@click.option("--index", "index_text", required=True, help="Finite index p >= 1.")
@click.option("--q", type=int, required=True, help="Flattened codimension (>= 1).")
@_format_option
@guarded
def reduce(body: str, index_text: str, q: int, fmt: str, out: str | None, no_figure: bool) -> None:
    """Check the flat-cylinder identity: boundary family of V x {0}^q at p equals a shifted index of V."""
    spec = parse_body(body)
    p = _parse_index(index_text)
    base_m = minkowski_polynomial(spec)
    report = adjoint_weyl_reduction(base_m, p, q)
    payload = {"command": "reduce", "body": body_label(spec), **report.to_json()}
    rows = [
        [k, value_text(report.lhs.coeff(k)), sign_and_float(report.lhs.coeff(k))[1]]
        for k in range(report.lhs.degree + 1)
    ]
    header = [
        f"base body: {body_label(spec)}",
        f"p: {report.p}  q: {report.q}  parity: {report.parity}",
        f"reduces to index {report.reduced_p} with codimension {report.reduced_q}",
        f"match: {'yes' if report.match else 'NO'}",
    ]
    emit(
        payload,
        ["k", "coefficient", "value"],
        rows,
        fmt,
        out,
        header_lines=header,
        figure=_curve_figure(report.lhs, f"reduced family, {body_label(spec)}, p={report.p}, q={q}"),
        no_figure=no_figure,
    )


if __name__ == "__main__":
    main()
