import json

import pytest

from artinalg.cli import main, parse_algebra_file
from artinalg.errors import AlgebraFileError

GOLDEN_FILE = """\
# quotient with an ungradable Gorenstein structure
vars: Y X
gens: X^3*Y; X^5;
      X*Y^3 + 2*X^3;
      3*X^2*Y^2 + 5*Y^4
"""

STAIRCASE_FILE = """\
vars: X Y
gens: X^3; X^2*Y; Y^2
"""

CHAIN_FILE = """\
vars: X
gens: X^3
"""

FOURTH_POWER_FILE = """\
vars: X Y
gens: X^4; X^3*Y; X^2*Y^2; X*Y^3; Y^4
"""


@pytest.fixture()
def golden_path(tmp_path):
    path = tmp_path / "golden.alg"
    path.write_text(GOLDEN_FILE)
    return str(path)


@pytest.fixture()
def staircase_path(tmp_path):
    path = tmp_path / "staircase.alg"
    path.write_text(STAIRCASE_FILE)
    return str(path)


@pytest.fixture()
def chain_path(tmp_path):
    path = tmp_path / "chain.alg"
    path.write_text(CHAIN_FILE)
    return str(path)


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestFileParsing:
    def test_golden_file(self, golden_path):
        variables, gens = parse_algebra_file(golden_path)
        assert variables == ("Y", "X")
        assert len(gens) == 4
        assert gens[2] == "X*Y^3 + 2*X^3"

    def test_missing_vars(self, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("gens: X^2\n")
        with pytest.raises(AlgebraFileError):
            parse_algebra_file(str(p))

    def test_stray_line(self, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("hello\nvars: X\ngens: X^2\n")
        with pytest.raises(AlgebraFileError):
            parse_algebra_file(str(p))

    def test_comments_stripped(self, tmp_path):
        p = tmp_path / "ok.alg"
        p.write_text("vars: X  # ambient\ngens: X^2 # the square\n")
        variables, gens = parse_algebra_file(str(p))
        assert variables == ("X",) and gens == ["X^2"]


class TestAnalyze:
    def test_golden_analysis(self, capsys, golden_path):
        code, report = run_json(capsys, ["analyze", golden_path])
        assert code == 0
        res = report["results"]
        assert res["dim"] == 12
        assert res["standard_graded"] is False
        assert res["local_over_q"] is True
        assert res["gorenstein"] is True
        assert res["socle"]["elements"] == ["X^4"]
        assert res["obstruction_nonzero"] is True
        assert res["embedding_dimension"] == 2
        assert res["principal_ideal_algebra"] is False

    def test_dual_numbers(self, capsys, tmp_path):
        p = tmp_path / "dual.alg"
        p.write_text("vars: X\ngens: X^2\n")
        code, report = run_json(capsys, ["analyze", str(p)])
        assert code == 0
        res = report["results"]
        assert res["principal_ideal_algebra"] is True
        assert res["obstruction_nonzero"] is False

    def test_fourth_power_components(self, capsys, tmp_path):
        p = tmp_path / "m4.alg"
        p.write_text(FOURTH_POWER_FILE)
        code, report = run_json(capsys, ["analyze", str(p)])
        assert code == 0
        res = report["results"]
        assert res["standard_graded"] is True
        assert res["component_dims"] == [1, 2, 3, 4]

    def test_non_local_algebra_skips_socle_data(self, capsys, tmp_path):
        p = tmp_path / "split.alg"
        p.write_text("vars: X\ngens: X^2 - 1\n")
        code, report = run_json(capsys, ["analyze", str(p)])
        assert code == 0
        res = report["results"]
        assert res["local_over_q"] is False
        assert res["socle"] is None
        assert res["nilradical"]["dim"] == 0

    def test_parse_error_exit_code(self, capsys, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("vars: X\ngens: X^^2\n")
        assert main(["analyze", str(p)]) == 2

    def test_positive_dimensional_exit_code(self, capsys, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("vars: X Y\ngens: X^2\n")
        assert main(["analyze", str(p)]) == 2


class TestHoms:
    def test_staircase_search(self, capsys, staircase_path):
        code, report = run_json(
            capsys,
            ["homs", staircase_path, "--nmax", "5", "--budget", "500"],
        )
        assert code == 0
        res = report["results"]
        assert res["count"] >= 10
        witness = {
            "N": 5,
            "images": [["0", "0", "1", "0", "0", "0"], ["0", "0", "0", "1", "0", "0"]],
        }
        trimmed = [
            {"N": h["N"], "images": h["images"]} for h in res["homs"]
        ]
        assert witness in trimmed

    def test_user_strategy_violation_is_input_error(self, capsys, staircase_path):
        code = main(
            [
                "homs",
                staircase_path,
                "--nmax",
                "6",
                "--strategy",
                "user",
                "--images",
                "t^2;t^3",
            ]
        )
        assert code == 2


class TestCritdeg:
    def test_staircase_lower_bound(self, capsys, staircase_path):
        code, report = run_json(
            capsys,
            ["critdeg", staircase_path, "--nmax", "12", "--budget", "2500"],
        )
        assert code == 0
        res = report["results"]
        assert res["lower_bound"] == 2
        assert res["upper_bound"] == 2
        assert res["witnesses_reverified"] is True

    def test_principal_is_input_error(self, capsys, chain_path):
        assert main(["critdeg", chain_path, "--nmax", "6"]) == 2


class TestTau:
    def test_golden_witness_killed(self, capsys, golden_path):
        code, report = run_json(
            capsys,
            [
                "tau",
                golden_path,
                "--witness",
                "X^2*Y^2",
                "--nmax",
                "10",
                "--budget",
                "400",
            ],
        )
        assert code == 0
        res = report["results"]
        assert res["all_killed"] is True
        assert res["element_killed_by_all"] is True
        assert res["nonzero"] is True

    def test_violation_exit_code(self, capsys, chain_path):
        code = main(
            ["tau", chain_path, "--witness", "X", "--nmax", "4", "--budget", "50"]
        )
        assert code == 3

    def test_missing_witness_is_input_error(self, capsys, golden_path):
        assert main(["tau", golden_path]) == 2

    def test_budget_exhaustion_exit_code(self, capsys, golden_path):
        code = main(
            [
                "tau",
                golden_path,
                "--witness",
                "X^2*Y^2",
                "--nmax",
                "10",
                "--budget",
                "0",
            ]
        )
        assert code == 4

    def test_staircase_witness_form_mode(self, capsys, staircase_path):
        code, report = run_json(
            capsys,
            ["tau", staircase_path, "--r", "2", "--nmax", "8", "--budget", "300"],
        )
        assert code == 0
        res = report["results"]
        assert res["all_killed"] is True
        assert res["nonzero"] is True


class TestSocleKill:
    def test_diagonal_gorenstein(self, capsys, tmp_path):
        p = tmp_path / "diag.alg"
        p.write_text("vars: X Y\ngens: X^2 - Y^2; X*Y\n")
        code, report = run_json(
            capsys,
            ["socle-kill", str(p), "--nmax", "8", "--budget", "300"],
        )
        assert code == 0
        res = report["results"]
        assert res["socle_kill"]["all_killed"] is True
        assert res["socle_differential"]["nonzero"] is True

    def test_principal_diagnostic(self, capsys, chain_path):
        assert main(["socle-kill", chain_path]) == 2

    def test_ungradable_gorenstein_differential_route_fails(self, capsys, golden_path):
        code, report = run_json(
            capsys,
            ["socle-kill", golden_path, "--nmax", "8", "--budget", "300"],
        )
        assert code == 0
        res = report["results"]
        assert res["socle_kill"]["all_killed"] is True
        assert res["socle_differential"]["nonzero"] is False
        assert "fails" in res["socle_differential"]["notes"]["socle_differential_route"]


class TestDeterminism:
    def test_byte_identical_json(self, capsys, staircase_path):
        argv = [
            "homs",
            staircase_path,
            "--nmax",
            "6",
            "--budget",
            "150",
            "--seed",
            "11",
            "--strategy",
            "monomial,dense-random",
            "--json",
        ]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        second = capsys.readouterr().out
        assert first == second

    def test_human_output_runs(self, capsys, staircase_path):
        assert main(["analyze", staircase_path]) == 0
        out = capsys.readouterr().out
        assert "dim: 5" in out
