"""Command-line interface: formats, exit codes, and record shapes."""

import csv
import io
import json
from fractions import Fraction

import stirnum.cli as cli
from stirnum.identities import VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.reader(io.StringIO(text)))


class TestScalarCommands:
    def test_stirling2_plain(self, capsys):
        code, out, _ = run(capsys, "stirling2", "5", "3")
        assert code == 0
        assert out == "25\n"

    def test_stirling1_plain(self, capsys):
        code, out, _ = run(capsys, "stirling1", "5", "2")
        assert code == 0
        assert out == "-50\n"

    def test_mdet(self, capsys):
        code, out, _ = run(capsys, "mdet", "1", "3", "3")
        assert code == 0
        assert out == "1/2\n"

    def test_stirling2_json(self, capsys):
        code, out, _ = run(capsys, "stirling2", "5", "3", "--format", "json")
        assert code == 0
        record = json.loads(out)
        assert record["parameters"] == {"n": 5, "k": 3}
        assert record["result"] == "25"
        assert record["status"] == "ok"
        assert record["command"][0] == "stirling2"

    def test_stirling2_csv(self, capsys):
        code, out, _ = run(capsys, "stirling2", "5", "3", "--format", "csv")
        assert code == 0
        rows = parse_csv(out)
        assert rows == [["n", "k", "result"], ["5", "3", "25"]]

    def test_bernoulli_plain(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "4", "--format", "plain")
        assert code == 0
        assert out == "-1/30\n"

    def test_bernoulli_methods_agree(self, capsys):
        code, oracle_out, _ = run(capsys, "bernoulli", "12")
        assert code == 0
        code, formula_out, _ = run(capsys, "bernoulli", "12", "--method", "formula")
        assert code == 0
        assert oracle_out == formula_out == "-691/2730\n"

    def test_bernoulli_formula_odd_rejected(self, capsys):
        code, out, _ = run(capsys, "bernoulli", "3", "--method", "formula")
        assert code == 1
        assert "error[domain]" in out

    def test_apostol(self, capsys):
        code, out, _ = run(capsys, "apostol-bernoulli", "2", "--lambda", "2")
        assert code == 0
        assert out == "-4\n"

    def test_apostol_negative_lambda_equals_form(self, capsys):
        code, out, _ = run(capsys, "apostol-bernoulli", "1", "--lambda=-3/2")
        assert code == 0
        assert out == f"{Fraction(1) / Fraction(-5, 2)}\n"

    def test_euler_number(self, capsys):
        code, out, _ = run(capsys, "euler-number", "6")
        assert code == 0
        assert out == "-61\n"


class TestPolynomialCommands:
    def test_euler_poly_plain(self, capsys):
        code, out, _ = run(capsys, "euler-poly", "2")
        assert code == 0
        assert out == "0 + -1*x + 1*x^2\n"

    def test_euler_poly_at(self, capsys):
        code, out, _ = run(capsys, "euler-poly", "2", "--at", "3")
        assert code == 0
        assert out == "6\n"

    def test_euler_poly_json(self, capsys):
        code, out, _ = run(capsys, "euler-poly", "3", "--format", "json")
        record = json.loads(out)
        assert record["result"]["coefficients"] == ["1/4", "0", "-3/2", "1"]

    def test_euler_poly_csv(self, capsys):
        code, out, _ = run(capsys, "euler-poly", "2", "--format", "csv")
        rows = parse_csv(out)
        assert rows[0] == ["degree", "coefficient"]
        assert rows[1:] == [["0", "0"], ["1", "-1"], ["2", "1"]]

    def test_two_param_notes_in_json(self, capsys):
        code, out, _ = run(
            capsys, "two-param-euler", "1", "--alpha", "1", "--lambda=-3", "--format", "json"
        )
        assert code == 0
        record = json.loads(out)
        assert record["result"]["coefficients"] == ["3/2", "-1"]
        assert record["notes"] and "outside" in record["notes"][0]

    def test_two_param_at(self, capsys):
        code, out, _ = run(
            capsys, "two-param-euler", "1", "--alpha", "1", "--lambda", "1", "--at", "1/2"
        )
        assert code == 0
        assert out == "0\n"


class TestSeriesDump:
    def test_recip_exp_minus_one(self, capsys):
        code, out, _ = run(capsys, "series", "dump", "recip-exp-minus-one", "--order", "8")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t^-1: 1"
        assert lines[1] == "t^0: -1/2"
        assert lines[2] == "t^1: 1/12"

    def test_recip_exp_plus_one_json(self, capsys):
        code, out, _ = run(
            capsys, "series", "dump", "recip-exp-plus-one", "--order", "6", "--format", "json"
        )
        record = json.loads(out)
        assert record["result"]["offset"] == 0
        assert record["result"]["coefficients"][0] == [0, "1/2"]

    def test_apostol_requires_lambda(self, capsys):
        code, out, err = run(capsys, "series", "dump", "apostol", "--order", "6")
        assert code == 2
        assert "lambda" in err

    def test_lambda_rejected_elsewhere(self, capsys):
        code, _, err = run(
            capsys, "series", "dump", "recip-exp-minus-one", "--lambda", "2", "--order", "6"
        )
        assert code == 2

    def test_apostol_dump(self, capsys):
        code, out, _ = run(capsys, "series", "dump", "apostol", "--lambda", "2", "--order", "7")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t^1: 1"
        assert lines[1] == "t^2: -2"


class TestVerifyCommand:
    def test_single_identity_ok(self, capsys):
        code, out, _ = run(capsys, "verify", "I3", "--k-max", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "3/3 ok"
        assert all("ok" in line for line in lines)

    def test_json_reports(self, capsys):
        code, out, _ = run(capsys, "verify", "I5", "--k-max", "2", "--format", "json")
        assert code == 0
        record = json.loads(out)
        checks = record["result"]["checks"]
        assert [c["k"] for c in checks] == [1, 2]
        assert all(c["passed"] for c in checks)
        assert record["result"]["passed"] is True

    def test_general_identity_with_explicit_point(self, capsys):
        code, out, _ = run(
            capsys, "verify", "G1", "--k-max", "2", "--alpha", "2", "--lambda", "1/2"
        )
        assert code == 0
        assert "alpha=2" in out and "lambda=1/2" in out

    def test_det_relation_target(self, capsys):
        code, out, _ = run(capsys, "verify", "det-relation", "--k-max", "5", "--format", "csv")
        assert code == 0
        rows = parse_csv(out)
        assert rows[0][0] == "id"
        assert all(row[8] == "true" for row in rows[1:])
        assert len(rows) - 1 == 15  # pairs with 1 <= k <= n <= 5

    def test_alt_sum_target(self, capsys):
        code, out, _ = run(capsys, "verify", "alt-sum", "--k-max", "4")
        assert code == 0
        assert out.splitlines()[-1] == "4/4 ok"

    def test_reductions_target(self, capsys):
        code, out, _ = run(capsys, "verify", "reductions", "--k-max", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "27/27 ok"  # 3 indices x 3 alphas x 3 lambdas

    def test_reductions_pole_parameter(self, capsys):
        code, out, _ = run(capsys, "verify", "reductions", "--k-max", "2", "--lambda=-1")
        assert code == 1
        assert "error[pole]" in out

    def test_verify_all_smoke(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--k-max", "1")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1].endswith("ok")
        # 10 single-parameter identities, 2 general ones on a 5x5 grid,
        # 1 det pair, 1 alt-sum row, 2x3x3 reduction rows
        assert len(lines) - 1 == 10 + 2 * 25 + 1 + 1 + 18

    def test_verification_failure_exits_three(self, capsys, monkeypatch):
        def fake(identity_id, k, order=None, coeff_override=None, min_window=8):
            return VerificationReport(
                identity_id=identity_id,
                k=k,
                alpha=None,
                lam=None,
                order=12,
                window=(-1, 9),
                passed=False,
                first_discrepancy=(0, Fraction(1, 2), Fraction(1, 3)),
            )

        monkeypatch.setattr("stirnum.identities.verify_core_identity", fake)
        code, out, _ = run(capsys, "verify", "I1", "--k-max", "2")
        assert code == 3
        assert "FAIL at t^0" in out
        assert "0/2 ok" in out

    def test_failure_row_in_csv(self, capsys, monkeypatch):
        def fake(identity_id, k, order=None, coeff_override=None, min_window=8):
            return VerificationReport(
                identity_id, k, None, None, 12, (-1, 9), False, (2, Fraction(1), Fraction(0))
            )

        monkeypatch.setattr("stirnum.identities.verify_core_identity", fake)
        code, out, _ = run(capsys, "verify", "I2", "--k-max", "1", "--format", "csv")
        assert code == 3
        rows = parse_csv(out)
        assert rows[1][8] == "false"
        assert rows[1][9:12] == ["2", "1", "0"]


class TestErrorsAndUsage:
    def test_pole_exit_code(self, capsys):
        code, out, _ = run(capsys, "apostol-bernoulli", "3", "--lambda", "1")
        assert code == 1
        assert out.startswith("error[pole]")

    def test_pole_json_record(self, capsys):
        code, out, _ = run(
            capsys, "two-param-euler", "2", "--alpha", "1", "--lambda=-1", "--format", "json"
        )
        assert code == 1
        record = json.loads(out)
        assert record["status"] == "error"
        assert record["error_kind"] == "pole"
        assert "result" not in record

    def test_domain_error(self, capsys):
        code, out, _ = run(capsys, "stirling2", "-4", "2")
        assert code == 1
        assert out.startswith("error[domain]")

    def test_precision_error(self, capsys):
        code, out, _ = run(capsys, "verify", "I1", "--k-max", "4", "--order", "9")
        assert code == 1
        assert out.startswith("error[precision]")

    def test_bad_rational_is_usage_error(self, capsys):
        code, _, err = run(capsys, "apostol-bernoulli", "2", "--lambda", "1.5")
        assert code == 2
        assert "usage" in err

    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2

    def test_missing_required_option(self, capsys):
        code, _, err = run(capsys, "apostol-bernoulli", "2")
        assert code == 2

    def test_unknown_verify_target(self, capsys):
        code, _, err = run(capsys, "verify", "I9")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "stirnum" in out


class TestDeterminism:
    def test_repeated_runs_identical(self, capsys):
        first = run(capsys, "verify", "all", "--k-max", "1", "--format", "json")
        second = run(capsys, "verify", "all", "--k-max", "1", "--format", "json")
        assert first == second
        code, out, _ = first
        assert code == 0
        record = json.loads(out)
        assert record["status"] == "ok"
        checks = record["result"]["checks"]
        assert len(checks) == 80
        assert all(check["passed"] for check in checks)

    def test_csv_line_termination(self, capsys):
        _, out, _ = run(capsys, "stirling2", "4", "2", "--format", "csv")
        assert out == "n,k,result\n4,2,7\n"
