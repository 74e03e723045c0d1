"""Tests for the command-line interface"""

import csv
import io
import json
import math

import pytest

from src.cli import main
from src.cli import verify
from src.cli.formatter import ResultFormatter
from src.roots import alpha_zero

pytestmark = pytest.mark.integration

ZETA_3 = 1.2020569031595942


def run(capsys, *argv):
    """Run the CLI and return (exit code, stdout)"""
    code = main(list(argv))
    return code, capsys.readouterr().out


def read_rows(text):
    """Parse CSV output into dictionaries"""
    return list(csv.DictReader(io.StringIO(text)))


def sign_changes(values):
    """Count strict sign changes along a sequence"""
    signs = [v > 0 for v in values]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def test_bounds_csv(capsys):
    """Test `bounds --alpha 0.5` reports the exact norm 4"""
    code, out = run(capsys, "bounds", "--alpha", "0.5")
    assert code == 0
    (row,) = read_rows(out)
    assert float(row["lower"]) == pytest.approx(4.0, abs=1e-9)
    assert float(row["upper"]) == pytest.approx(4.0, abs=1e-9)
    assert row["exact"] == "true"
    assert float(row["composition_upper"]) == pytest.approx(2.0, abs=1e-9)


def test_bounds_json(capsys):
    """Test `bounds --alpha 1.5 --format json`"""
    code, out = run(capsys, "bounds", "--alpha", "1.5", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["lower"] == pytest.approx(4.0 / 3.0, abs=1e-9)
    assert 1.34 < document["upper"] < 1.35
    assert document["exact"] is False
    assert document["upper_method"] == "cauchy_schwarz_sup"
    assert document["composition"]["re_w"] == 2.0


def test_bounds_with_section(capsys):
    """Test the section eigenvalue can raise the lower bound"""
    code, out = run(capsys, "bounds", "--alpha", "3", "--section", "64", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["lower"] <= document["upper"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "--alpha", "-1"],
        ["bounds"],
        ["eig", "--alpha", "1"],
        ["scan", "--alpha-min", "2", "--alpha-max", "1"],
        ["scan", "--steps", "1"],
        ["sandwich", "--alpha-min", "1.5"],
        ["rayleigh", "--alpha", "1", "--eps", "2", "--n", "10"],
        ["verify", "--suite", "unknown"],
        ["verify", "--tol", "1e-6"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    """Test invalid invocations exit with status 2"""
    assert main(argv) == 2


def test_help_exits_zero(capsys):
    """Test --help exits with status 0"""
    assert main(["--help"]) == 0


def test_scan_figure_rows(capsys):
    """Test the scan row at alpha = 1 and the single crossings on [1, 2]"""
    code, out = run(capsys, "scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "1001")
    assert code == 0
    rows = read_rows(out)
    assert len(rows) == 1001
    assert float(rows[0]["alpha"]) == 1.0
    assert float(rows[0]["two_over_alpha"]) == 2.0
    assert float(rows[0]["zeta_1p_alpha"]) == pytest.approx(1.644934, abs=1e-6)
    assert rows[0]["improved_lower"] == "nan"

    alphas = [float(r["alpha"]) for r in rows]
    first = [float(r["zeta_1p_alpha"]) - float(r["two_over_alpha"]) for r in rows]
    second = [float(r["zeta_1p_2alpha"]) - float(r["two_over_alpha"]) for r in rows]
    assert sign_changes(first) == 1
    assert sign_changes(second) == 1

    i = next(k for k in range(1000) if (first[k] > 0) != (first[k + 1] > 0))
    assert alphas[i] <= alpha_zero().value <= alphas[i + 1]


def test_scan_default_grid_json(capsys):
    """Test the default scan grid and null improved bound in JSON"""
    code, out = run(capsys, "scan", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 101
    assert rows[0]["improved_lower"] is None
    expected = 2.0 - (math.pi ** 4 / 90.0) / ZETA_3
    assert rows[-1]["improved_lower"] == pytest.approx(expected, abs=1e-9)


def test_scan_byte_identical(capsys):
    """Test two identical invocations produce identical bytes"""
    argv = ("scan", "--alpha-min", "1", "--alpha-max", "2", "--steps", "51")
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_scan_unwritable_output(capsys, tmp_path):
    """Test an unwritable output path exits with status 1"""
    target = tmp_path / "missing" / "scan.csv"
    assert main(["scan", "--output", str(target)]) == 1


def test_scan_output_file(capsys, tmp_path):
    """Test output goes to the requested file"""
    target = tmp_path / "scan.csv"
    assert main(["scan", "--steps", "3", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert len(read_rows(target.read_text(encoding="utf-8"))) == 3


def test_sandwich(capsys):
    """Test the sandwich columns are finite and positive on [2, 8]"""
    code, out = run(capsys, "sandwich")
    assert code == 0
    rows = read_rows(out)
    assert float(rows[0]["alpha"]) == 2.0
    for row in rows:
        for column in ("scaled_lower_gap", "scaled_upper_gap"):
            value = float(row[column])
            assert math.isfinite(value) and value > 0


def test_sup(capsys):
    """Test `sup --alpha 3` reports zeta(4) at m = 1"""
    code, out = run(capsys, "sup", "--alpha", "3", "--m-max", "1000", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["argmax"] == 1
    assert document["sup"] == pytest.approx(math.pi ** 4 / 90.0, abs=1e-9)


def test_sup_large_alpha(capsys):
    """Test `sup --alpha 70` over the default 1e5 rows, where m**alpha overflows"""
    code, out = run(capsys, "sup", "--alpha", "70", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["argmax"] == 1
    assert document["sup"] == pytest.approx(1.0, abs=1e-15)


def test_sandwich_large_alpha(capsys):
    """Test the sandwich gaps settle at 1 and 1/2 up to alpha = 600"""
    code, out = run(capsys, "sandwich", "--alpha-min", "20", "--alpha-max", "600", "--steps", "3")
    assert code == 0
    rows = read_rows(out)
    assert [float(row["alpha"]) for row in rows] == [20.0, 310.0, 600.0]
    for row in rows:
        assert float(row["scaled_lower_gap"]) == pytest.approx(1.0, abs=1e-5)
        assert float(row["scaled_upper_gap"]) == pytest.approx(0.5, abs=1e-3)


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "--alpha", "1.5"],
        ["scan", "--steps", "2"],
        ["sandwich", "--steps", "2"],
        ["rayleigh", "--alpha", "2", "--family", "alpha_family"],
    ],
)
def test_tol_reaches_zeta(capsys, argv):
    """Test --tol sets the zeta budget: an unreachable tolerance hits the cutoff cap"""
    assert main(argv) == 0
    capsys.readouterr()
    assert main(argv + ["--tol", "1e-300"]) == 1
    assert "cap" in capsys.readouterr().err


def test_eig(capsys):
    """Test `eig` on the 2 x 2 section at alpha = 1/2"""
    code, out = run(capsys, "eig", "--alpha", "0.5", "--n", "2", "--tol", "1e-12")
    assert code == 0
    (row,) = read_rows(out)
    assert float(row["value"]) == pytest.approx((3.0 + math.sqrt(5.0)) / 4.0, abs=1e-10)
    assert float(row["upper"]) == pytest.approx(4.0)


def test_rayleigh_closed_form(capsys):
    """Test the alpha_family closed form through the CLI"""
    code, out = run(
        capsys, "rayleigh", "--alpha", "2", "--family", "alpha_family", "--format", "json"
    )
    assert code == 0
    document = json.loads(out)
    assert document["n"] is None
    assert document["value"] == pytest.approx(1.099608, abs=1e-6)


def test_roots(capsys):
    """Test `roots` lists the six named roots"""
    code, out = run(capsys, "roots", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert set(document) == {
        "alpha0", "alpha1", "alpha2", "zeta_vs_2a", "zeta2_vs_2a", "improved_vs_2a"
    }
    assert math.floor(document["alpha0"]["value"] * 100) == 148


def test_seed_info(capsys):
    """Test --seed-info prints the named constants"""
    code, out = run(capsys, "--seed-info")
    assert code == 0
    document = json.loads(out)
    assert document["alpha1"] > document["alpha2"]
    assert document["alpha0"] == alpha_zero().value


@pytest.mark.parametrize("suite", ["signs", "monotone_h", "identity", "transference"])
def test_verify_suites_pass(capsys, suite):
    """Test the fast suites report no failures"""
    code, out = run(capsys, "verify", "--suite", suite)
    assert code == 0
    (row,) = read_rows(out)
    assert row["suite"] == suite
    assert int(row["failures"]) == 0
    assert int(row["cases"]) > 0


@pytest.mark.slow
@pytest.mark.parametrize("suite", ["lemma4", "sup_formula"])
def test_verify_slow_suites_pass(capsys, suite):
    """Test the direct-summation suites report no failures"""
    code, _ = run(capsys, "verify", "--suite", suite)
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    """Test a failing relation gives exit status 1 and lists its inputs"""
    def broken():
        outcome = verify.VerifyOutcome(suite="signs")
        outcome.check(False, "always fails", {"x": 1.0}, observed=2.0)
        return outcome

    monkeypatch.setitem(verify.SUITES, "signs", broken)
    code, out = run(capsys, "verify", "--suite", "signs", "--format", "json")
    assert code == 1
    document = json.loads(out)
    assert document["passed"] is False
    (failure,) = document["outcomes"][0]["failures"]
    assert failure["inputs"] == {"x": 1.0}
    assert failure["relation"] == "always fails"


def test_verify_lemma4_reduced_grid():
    """Test lemma4 passes and notes the published partial_upper_12 once per alpha"""
    outcome = verify.verify_lemma4(alphas=(1.0, 1.5, 1.9, 2.5), m_max=50)
    assert outcome.passed, [failure.to_dict() for failure in outcome.failures[:3]]
    assert outcome.cases > 0
    deviations = {deviation.inputs["alpha"]: deviation.observed for deviation in outcome.deviations}
    assert set(deviations) == {1.5, 1.9}
    for observed in deviations.values():
        assert observed["violations"] == 49
        assert observed["first_m"] == 2
        assert observed["worst_excess"] > 0


def test_verify_reports_deviations(capsys, monkeypatch):
    """Test deviations are listed without failing the run"""
    monkeypatch.setitem(
        verify.SUITES, "lemma4", lambda: verify.verify_lemma4(alphas=(1.5,), m_max=20)
    )
    code, out = run(capsys, "verify", "--suite", "lemma4", "--format", "json")
    assert code == 0
    (outcome,) = json.loads(out)["outcomes"]
    assert outcome["failures"] == []
    (deviation,) = outcome["deviations"]
    assert deviation["observed"]["violations"] == 19

    code, out = run(capsys, "verify", "--suite", "lemma4")
    assert code == 0
    (row,) = read_rows(out)
    assert row["deviations"] == "1"
    assert row["failures"] == "0"

def test_format_value():
    """Test CSV field rendering"""
    assert ResultFormatter.format_value(0.1) == "0.1"
    assert ResultFormatter.format_value(math.nan) == "nan"
    assert ResultFormatter.format_value(True) == "true"
    assert ResultFormatter.format_value(None) == ""
    assert ResultFormatter.format_value(3) == "3"
