"""End-to-end tests of the command-line interface."""
from __future__ import annotations

import json
import math

import pytest
from click.testing import CliRunner

from tubepoly import cli
from tubepoly.bodies import Adjoint, Ball, Cube, Ellipsoid, Product
from tubepoly.errors import ConsistencyError


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args):
    result = runner.invoke(cli.main, args, catch_exceptions=False)
    return result


# -- shorthand parsing -----------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("ball:3", Ball(3)),
        ("cube:2", Cube(2)),
        ("adjoint:ball:2,q=1", Adjoint(Ball(2), 1)),
        ("adjoint:adjoint:cube:1,q=2,q=3", Adjoint(Adjoint(Cube(1), 2), 3)),
        ("product:ball:2;cube:1", Product(Ball(2), Cube(1))),
    ],
)
def test_parse_body(text, expected):
    assert cli.parse_body(text) == expected


def test_parse_ellipsoid():
    spec = cli.parse_body("ellipsoid:2,q=1,eps=1/100")
    assert isinstance(spec, Ellipsoid)
    assert (spec.n, spec.q) == (2, 1)
    assert spec.eps.numerator == 1 and spec.eps.denominator == 100


@pytest.mark.parametrize(
    "text", ["wedge:3", "ball", "ball:x", "adjoint:ball:2", "product:ball:2", "ellipsoid:2"]
)
def test_parse_body_rejects(text):
    with pytest.raises(Exception):
        cli.parse_body(text)


@pytest.mark.parametrize(
    "text,label",
    [
        ("madjoint:2", "M_ball_adjoint(2)"),
        ("wball:3", "W_ball(3)"),
        ("wball:inf", "W_ball(inf)"),
        ("wcubecyl:1", "W_cube_cyl(1)"),
        ("ml", "MittagLeffler"),
    ],
)
def test_parse_series(text, label):
    assert cli.parse_series(text).label() == label


def test_body_label_round_trip():
    for text in ["ball:3", "cube:2", "adjoint:ball:2,q=1", "product:ball:2;cube:1"]:
        spec = cli.parse_body(text)
        assert cli.parse_body(cli.body_label(spec)) == spec


# -- happy paths and contents ---------------------------------------------


def test_minkowski_json(runner):
    result = invoke(runner, ["minkowski", "--body", "ball:3", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["schema"] == 1
    assert doc["dimension"] == 3
    values = [c["value"] for c in doc["polynomial"]["coefficients"]]
    assert values[0] == pytest.approx(4 * math.pi / 3, rel=1e-12)
    assert values[2] == pytest.approx(4 * math.pi, rel=1e-12)


def test_weyl_sphere_roots(runner):
    result = invoke(
        runner, ["weyl", "--body", "ball:9", "--index", "1", "--roots", "--format", "json"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["surface_dim"] == 9
    imags = sorted(z[1] for z in doc["roots"] if z[1] > 0)
    expected = [math.tan(k * math.pi / 10) for k in range(1, 5)]
    for got, want in zip(imags, expected):
        assert got == pytest.approx(want, abs=1e-9)
    assert all(abs(z[0]) < 1e-9 for z in doc["roots"])


def test_classify_dissipative(runner):
    result = invoke(runner, ["classify", "--body", "ball:4", "--mode", "dissipative", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["result"]["label"] == "dissipative"
    assert doc["verdict"] is True


def test_classify_conservative_even_cylinder(runner):
    result = invoke(
        runner,
        ["classify", "--body", "adjoint:cube:3,q=1", "--mode", "conservative", "--index", "2", "--format", "json"],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["verdict"] is True


def test_jensen_matches_library(runner):
    from tubepoly import entire
    from tubepoly.polynomials import jensen_polynomial
    from tubepoly.scalars import sign_and_float

    result = invoke(runner, ["jensen", "--series", "wball:2", "--n", "6", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    spec = entire.w_ball(2)
    expected = jensen_polynomial(entire.taylor_coefficients(spec, 7), 6)
    got = [c["value"] for c in doc["polynomial"]["coefficients"]]
    want = [sign_and_float(expected.coeff(k))[1] for k in range(7)]
    assert got == pytest.approx(want, rel=1e-12)


def test_series_scan_real_axis(runner):
    result = invoke(
        runner,
        ["series-scan", "--series", "wball:2", "--degrees", "10,20", "--format", "json"],
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["onset_degree"] is None
    assert [r["violations"] for r in doc["rows"]] == [0, 0]


def test_af_check_measures(runner):
    result = invoke(runner, ["af-check", "--measures", "1,4,6,4,1", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["all_hold"] is True
    assert all(r["strict"] for r in doc["rows"])


def test_af_check_body(runner):
    result = invoke(runner, ["af-check", "--body", "ball:5", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["all_hold"] is True


def test_af_check_requires_one_source(runner):
    assert runner.invoke(cli.main, ["af-check"]).exit_code == 2
    assert (
        runner.invoke(cli.main, ["af-check", "--body", "ball:3", "--measures", "1,1,1,1"]).exit_code
        == 2
    )


def test_lowdim_body(runner):
    result = invoke(runner, ["lowdim", "--body", "cube:5", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["all_hold"] is True


def test_lowdim_rejects_big_n(runner):
    assert runner.invoke(cli.main, ["lowdim", "--body", "ball:7"]).exit_code == 2


def test_counterexample_finds_witness(runner):
    result = invoke(runner, ["counterexample", "--n", "30", "--budget", "200", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["witness"] is not None
    assert doc["witness"]["failing_index"] == 5
    assert doc["witness"]["determinant_signs"][-1] == -1


def test_counterexample_none_found(runner):
    result = invoke(runner, ["counterexample", "--n", "4", "--budget", "3", "--max-index", "2", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["witness"] is None


def test_mc_volume_csv(runner):
    result = invoke(
        runner,
        ["mc-volume", "--body", "cube:2", "--t", "0.25", "--samples", "10000", "--seed", "3", "--format", "csv"],
    )
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "t,estimate,stderr,predicted,z"
    fields = lines[1].split(",")
    assert float(fields[3]) == pytest.approx(4 + 8 * 0.25 + math.pi * 0.0625, rel=1e-12)
    assert abs(float(fields[4])) < 4.0


def test_reduce_match(runner):
    result = invoke(
        runner, ["reduce", "--body", "ball:2", "--index", "1", "--q", "1", "--format", "json"]
    )
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["match"] is True
    assert doc["parity"] == "odd"


# -- determinism -----------------------------------------------------------


@pytest.mark.parametrize(
    "args",
    [
        ["minkowski", "--body", "adjoint:ball:2,q=1", "--format", "json"],
        ["weyl", "--body", "cube:4", "--index", "inf", "--format", "csv"],
        ["mc-volume", "--body", "ball:2", "--t", "0.1,0.5", "--samples", "10000", "--seed", "11", "--format", "csv"],
        ["series-scan", "--series", "madjoint:1", "--degrees", "8,12", "--format", "json"],
    ],
)
def test_byte_identical_output(runner, args):
    first = invoke(runner, args)
    second = invoke(runner, args)
    assert first.exit_code == 0 and second.exit_code == 0
    assert first.stdout_bytes == second.stdout_bytes


# -- files and figures -----------------------------------------------------


def test_out_writes_report_and_figure(runner, tmp_path):
    out = tmp_path / "report.json"
    result = invoke(
        runner, ["minkowski", "--body", "ball:3", "--format", "json", "--out", str(out)]
    )
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    png = tmp_path / "report.png"
    assert png.exists()
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_no_figure_flag(runner, tmp_path):
    out = tmp_path / "report.csv"
    result = invoke(
        runner,
        ["weyl", "--body", "ball:5", "--index", "2", "--format", "csv", "--out", str(out), "--no-figure"],
    )
    assert result.exit_code == 0
    assert out.exists()
    assert not (tmp_path / "report.png").exists()


def test_root_scatter_figure(runner, tmp_path):
    out = tmp_path / "roots.json"
    result = invoke(
        runner,
        ["classify", "--body", "ball:5", "--mode", "dissipative", "--format", "json", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert (tmp_path / "roots.png").exists()


def test_mc_figure(runner, tmp_path):
    out = tmp_path / "mc.csv"
    result = invoke(
        runner,
        ["mc-volume", "--body", "ball:2", "--t", "0.25,0.5", "--samples", "10000", "--seed", "5", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert (tmp_path / "mc.png").exists()


# -- exit codes ------------------------------------------------------------


def test_usage_exit_codes(runner):
    assert runner.invoke(cli.main, ["minkowski", "--body", "wedge:3"]).exit_code == 2
    assert runner.invoke(cli.main, ["minkowski"]).exit_code == 2
    assert runner.invoke(cli.main, ["jensen", "--series", "nope:1", "--n", "4"]).exit_code == 2
    assert (
        runner.invoke(cli.main, ["mc-volume", "--body", "ball:2", "--t", "0.1", "--samples", "10"]).exit_code
        == 2
    )
    assert (
        runner.invoke(cli.main, ["minkowski", "--body", "ellipsoid:2,q=1,eps=1/100"]).exit_code == 2
    )


def test_consistency_exit_code(runner, monkeypatch):
    def boom(*args, **kwargs):
        raise ConsistencyError("routes disagree")

    monkeypatch.setattr(cli, "classify", boom)
    result = runner.invoke(cli.main, ["classify", "--body", "ball:3", "--mode", "dissipative"])
    assert result.exit_code == 3


def test_reduce_infinite_index_rejected(runner):
    assert (
        runner.invoke(cli.main, ["reduce", "--body", "ball:2", "--index", "inf", "--q", "1"]).exit_code
        == 2
    )
