# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT

# Many Pylnt conventions are broken for the sake of test readability
# Others fail because Pylint doesn't understand Pytest.
# Therefore skip this file.
# pylint: skip-file

import csv
import io
import json

import numpy as np
import pytest

from biffobear_hyperboloid import cli, errors, verify

SYMMETRIC_QUAD = {
    "quad": {"x0": [2**0.5, 1.0, -1.0], "x1": [2**0.5, -1.0, -1.0], "y": [0, 0, 1]}
}


def regular_lengths(cosh_length=np.cosh(1.0)):
    matrix = np.full((4, 4), cosh_length)
    np.fill_diagonal(matrix, 1.0)
    return matrix.tolist()


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--no-timestamp")
    assert code == cli.EXIT_OK, err
    return json.loads(out)


def test_floats_are_written_with_17_significant_digits():
    assert cli._encode(0.1) == "0.10000000000000001"
    assert cli._encode({"a": [np.float64(1.5), True, None]}) == (
        '{"a": [1.5, true, null]}'
    )
    assert json.loads(cli._encode(np.float64(np.pi))) == np.pi


@pytest.mark.parametrize(
    "vector, text",
    [
        ("[1, 1, 0]", "light-like, positive"),
        ("[-2, 0, 1]", "time-like, negative"),
        ("[0, 1, 0]", "space-like"),
    ],
)
def test_classify(capsys, vector, text):
    assert run_json(capsys, "classify", vector)["class"] == text


def test_classify_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[1, 1, 0]"))
    assert run_json(capsys, "classify", "-")["kind"] == "light-like"


def test_classify_csv(capsys):
    code, out, _ = run(capsys, "classify", "[1, 1, 0]", "--format", "csv")
    assert code == cli.EXIT_OK
    header, row = out.strip().splitlines()
    assert header == "class,kind,positive,norm_squared"
    assert row.startswith('"light-like, positive",light-like,true,')


def test_timestamp_is_optional(capsys):
    assert "timestamp" in json.loads(run(capsys, "classify", "[1, 1, 0]")[1])
    assert "timestamp" not in run_json(capsys, "classify", "[1, 1, 0]")


def test_dist_point_horosphere(capsys):
    report = run_json(
        capsys,
        "dist",
        '{"kind": "point", "coords": [1, 0, 0]}',
        '{"kind": "horoball", "coords": [1, 1, 0]}',
    )
    assert report["lemma"] == "point-horosphere"
    assert report["distance"] == pytest.approx(0.0, abs=1e-15)
    assert report["witness"]["kind"] == "geodesic"


def test_dist_is_symmetric_in_argument_order(capsys):
    point = '{"kind": "point", "coords": [1, 0, 0]}'
    ball = '{"kind": "horoball", "coords": [2, 2, 0]}'
    forward = run_json(capsys, "dist", point, ball)
    backward = run_json(capsys, "dist", ball, point)
    assert forward == backward
    assert forward["distance"] == pytest.approx(np.log(2.0))


def test_dist_intersecting_planes(capsys):
    report = run_json(
        capsys,
        "dist",
        '{"kind": "halfspace", "coords": [0, 1, 0]}',
        '{"kind": "halfspace", "coords": [0, 0, 1]}',
    )
    assert report["relation"] == "intersecting"
    assert report["angle"] == pytest.approx(np.pi / 2)


def test_dist_ultraparallel_planes_reports_feet(capsys):
    half = 0.5
    first = {"kind": "halfspace", "coords": [np.sinh(half), -np.cosh(half), 0]}
    second = {"kind": "halfspace", "coords": [np.sinh(half), np.cosh(half), 0]}
    report = run_json(capsys, "dist", json.dumps(first), json.dumps(second))
    assert report["relation"] == "ultraparallel"
    assert report["distance"] == pytest.approx(1.0)
    assert len(report["feet"]) == 2


def test_malformed_json_exits_2(capsys):
    code, out, err = run(capsys, "classify", "[1, 1,")
    assert code == cli.EXIT_PARSE
    assert out == ""
    assert err.startswith("error:")


def test_unknown_kind_exits_2(capsys):
    code, _, _ = run(
        capsys,
        "dist",
        '{"kind": "circle", "coords": [1, 0, 0]}',
        '{"kind": "point", "coords": [1, 0, 0]}',
    )
    assert code == cli.EXIT_PARSE


def test_geometry_error_exits_3_with_its_name(capsys):
    code, _, err = run(
        capsys,
        "dist",
        '{"kind": "point", "coords": [1, 0, 0]}',
        '{"kind": "horoball", "coords": [1, 0, 0]}',
    )
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("NotLightLike:")


def test_quad_report(capsys):
    (report,) = run_json(capsys, "quad", json.dumps(SYMMETRIC_QUAD))["quad"]
    assert report["seed"] is None
    assert np.cosh(report["measured"]["ell"]) == pytest.approx(3.0)
    assert report["law"]["theta0"] == pytest.approx(2**0.5)
    assert report["residuals"]["side_law"] <= 1e-9


def test_quad_from_file(capsys, tmp_path):
    source = tmp_path / "quad.json"
    source.write_text(json.dumps(SYMMETRIC_QUAD))
    (report,) = run_json(capsys, "quad", "--input", str(source))["quad"]
    assert report["measured"]["theta1"] == pytest.approx(2**0.5)


def test_quad_random_batch_is_reproducible(capsys):
    first = run(capsys, "quad", "--count", "3", "--seed", "4", "--no-timestamp")[1]
    second = run(capsys, "quad", "--count", "3", "--seed", "4", "--no-timestamp")[1]
    assert first == second
    reports = json.loads(first)["quad"]
    assert [r["seed"] for r in reports] == cli.oracle.instance_seeds(4, 3)


def test_quad_on_the_wrong_side_exits_3(capsys):
    flipped = {"quad": dict(SYMMETRIC_QUAD["quad"], y=[0, 0, -1])}
    code, _, err = run(capsys, "quad", json.dumps(flipped))
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("WrongSide:")


def test_pent_from_scalars(capsys):
    (report,) = run_json(capsys, "pent", '{"pent": {"d": 1, "a0": 0, "a1": 0}}')[
        "pent"
    ]
    expected = (np.cosh(1.0) + 1.0) / np.sinh(1.0)
    assert report["measured"]["cosh_ell0"] == pytest.approx(expected)
    assert report["measured"]["cosh_ell1"] == pytest.approx(expected)
    assert report["residuals"]["closing"] <= 1e-9


def test_pent_csv_flattens_nested_reports(capsys):
    code, out, _ = run(capsys, "pent", "--count", "2", "--format", "csv")
    assert code == cli.EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert "measured.theta" in lines[0].split(",")
    assert "residuals.arc_law" in lines[0].split(",")


def test_tetra_realize(capsys):
    report = run_json(
        capsys, "tetra", "realize", json.dumps({"L": regular_lengths()})
    )
    assert len(report["normals"]) == 4
    assert report["degenerate"] is False


def test_tetra_realize_with_wrong_signature_exits_3(capsys):
    matrix = np.full((4, 4), 1.1)
    matrix[0, 1] = matrix[1, 0] = matrix[2, 3] = matrix[3, 2] = 10.0
    np.fill_diagonal(matrix, 1.0)
    code, _, err = run(
        capsys, "tetra", "realize", json.dumps({"L": matrix.tolist()})
    )
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("SignatureError:")


def test_tetra_transversal_of_the_regular_tetrahedron(capsys):
    report = run_json(
        capsys, "tetra", "transversal", json.dumps({"L": regular_lengths()})
    )
    (solid,) = report["tetra"]
    expected = 2.0 * np.cosh(1.0) / (np.cosh(1.0) - 1.0)
    assert len(solid["transversals"]) == 3
    for found in solid["transversals"]:
        assert found["coshT"] == pytest.approx(expected, rel=1e-10)
        assert found["degenerate"] is False


def test_tetra_transversal_batch_csv(capsys):
    code, out, _ = run(
        capsys,
        "tetra",
        "transversal",
        "--count",
        "2",
        "--seed",
        "3",
        "--pair",
        "0,1:2,3",
        "--format",
        "csv",
    )
    assert code == cli.EXIT_OK
    header, *rows = out.strip().splitlines()
    assert header.split(",") == [
        "seed",
        "L01",
        "L02",
        "L03",
        "L12",
        "L13",
        "L23",
        "s0",
        "t0",
        "coshT",
        "T",
        "degenerate",
        "pair",
    ]
    assert len(rows) == 2
    assert rows[0].split(",")[-1] == "01:23"


def test_tetra_transversal_rejects_a_bad_pair(capsys):
    code, _, _ = run(
        capsys,
        "tetra",
        "transversal",
        json.dumps({"L": regular_lengths()}),
        "--pair",
        "0,1:1,3",
    )
    assert code == cli.EXIT_PARSE


def test_tetra_bound(capsys):
    assert run_json(capsys, "tetra", "bound", "1.5", "1.5", "1.5")[
        "bound"
    ] == pytest.approx(6.0)
    report = run_json(capsys, "tetra", "bound", "1.5", "1.5", *["1.5"] * 4)
    assert report["coshT"] == pytest.approx(report["bound"], rel=1e-10)


def test_tetra_bound_needs_one_or_four_values(capsys):
    code, _, _ = run(capsys, "tetra", "bound", "1.5", "1.5", "2", "3")
    assert code == cli.EXIT_PARSE


def test_tetra_bound_outside_its_domain_exits_3(capsys):
    code, _, err = run(capsys, "tetra", "bound", "1.0", "1.5", "2")
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("DomainError:")


def test_tetra_bound_with_impossible_edges_exits_3(capsys):
    code, out, err = run(
        capsys, "tetra", "bound", "3.24", "26.29", *["1.09"] * 4
    )
    assert code == cli.EXIT_GEOMETRY
    assert out == ""
    assert err.startswith("NotRealizable:")


def test_tetra_bound_needs_cross_lengths_above_1(capsys):
    code, _, err = run(capsys, "tetra", "bound", "1.5", "1.5", "1.0")
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("DomainError:")


def test_random_draws_that_give_up_exit_3(capsys, mocker):
    mocker.patch.object(
        cli.oracle,
        "random_edge_lengths",
        side_effect=errors.BudgetExceeded("no tetrahedron"),
    )
    code, _, err = run(capsys, "tetra", "transversal", "--count", "1")
    assert code == cli.EXIT_GEOMETRY
    assert err.startswith("BudgetExceeded:")


@pytest.fixture
def suite_result():
    def make(name, passed):
        failed = [] if passed else [1]
        return verify.SuiteResult(
            name, passed, 10, 7, {"error": 0.0}, {"error": 0.0}, failed
        )

    return make


@pytest.mark.parametrize(
    "passed, code", [(True, cli.EXIT_OK), (False, cli.EXIT_FAILED)]
)
def test_verify_exit_code_follows_the_result(
    capsys, mocker, suite_result, passed, code
):
    run_suite = mocker.patch.object(
        cli.verify, "run_suite", return_value=suite_result("quad", passed)
    )
    result = run(capsys, "verify", "quad", "--count", "10", "--seed", "7")
    assert result[0] == code
    run_suite.assert_called_once_with(
        "quad", count=10, seed=7, workers=1, tolerances=verify.TOLERANCES
    )
    assert json.loads(result[1])["passed"] is passed


def test_verify_uses_the_suite_default_count(capsys, mocker, suite_result):
    run_suite = mocker.patch.object(
        cli.verify, "run_suite", return_value=suite_result("pent", True)
    )
    run(capsys, "verify", "pent")
    assert run_suite.call_args.kwargs["count"] is None


def test_verify_all(capsys, mocker, suite_result):
    run_all = mocker.patch.object(
        cli.verify,
        "run_all",
        return_value=[suite_result("pent", True), suite_result("quad", False)],
    )
    code, out, _ = run(capsys, "verify", "all", "--workers", "3")
    assert code == cli.EXIT_FAILED
    assert run_all.call_args.kwargs["workers"] == 3
    assert [s["name"] for s in json.loads(out)["suites"]] == ["pent", "quad"]


def test_tolerance_overrides(capsys, mocker, suite_result):
    run_suite = mocker.patch.object(
        cli.verify, "run_suite", return_value=suite_result("quad", True)
    )
    run(capsys, "verify", "quad", "--tol.deg", "1e-6", "--tol.obj=1e-8")
    tolerances = run_suite.call_args.kwargs["tolerances"]
    assert tolerances["deg"] == 1e-6
    assert tolerances["obj"] == 1e-8
    assert tolerances["quad"] == verify.TOLERANCES["quad"]


@pytest.mark.parametrize(
    "argv", [["--tol.nothing", "1"], ["--tol.deg", "small"], ["--tol.deg"]]
)
def test_bad_tolerance_exits_2(capsys, argv):
    code, _, err = run(capsys, "classify", "[1, 1, 0]", *argv)
    assert code == cli.EXIT_PARSE
    assert "error:" in err


def test_unknown_command_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as raised:
        cli.main(["transmogrify"])
    assert raised.value.code == 2


def test_verify_all_csv_keeps_every_suite_in_its_own_columns(capsys, mocker):
    results = [
        verify.SuiteResult(
            "lorentz", True, 1, 3, {"bilinear": 0.5, "error": 0.0}, {}, []
        ),
        verify.SuiteResult(
            "objects", True, 1, 3, {"band_fuzz": 0.25, "error": 0.0}, {}, []
        ),
    ]
    mocker.patch.object(cli.verify, "run_all", return_value=results)
    code, out, _ = run(capsys, "verify", "all", "--format", "csv")
    assert code == cli.EXIT_OK
    lorentz_row, objects_row = csv.DictReader(io.StringIO(out))
    assert lorentz_row["suite"] == "lorentz"
    assert lorentz_row["worst.bilinear"] == "0.5"
    assert lorentz_row["worst.band_fuzz"] == ""
    assert objects_row["worst.band_fuzz"] == "0.25"
    assert objects_row["worst.bilinear"] == ""
    assert objects_row["worst.error"] == "0"
