"""Command-line contract: exit codes, report formats, determinism."""

import json
import math

import pytest

from b2weight.cli import main, parse_rational


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_rational_accepts_both_notations():
    from fractions import Fraction

    assert parse_rational("3/10") == Fraction(3, 10)
    assert parse_rational("0.3") == Fraction(3, 10)
    assert parse_rational("-1/4") == Fraction(-1, 4)


def test_verify_exact_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "exact", "--nmax", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall_pass"] is True
    assert payload["suite"] == "exact"
    assert all(check["pass"] for check in payload["checks"])
    names = [check["name"] for check in payload["checks"]]
    assert names == sorted(names)


def test_verify_quad_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "quad", "--k0", "0.3", "--k1", "0.1",
        "--nmax", "2", "--tol", "1e-8",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["overall_pass"] is True
    assert payload["k0"] == "0.3" and payload["k1"] == "0.1"


def test_verify_quad_fails_outside_region(capsys):
    code, out, _ = run_cli(capsys, "verify", "quad", "--k0", "0.3", "--k1", "0.3")
    assert code == 1
    payload = json.loads(out)
    assert payload["overall_pass"] is False


def test_verify_asym_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "asym", "--k0", "0.2", "--k1", "0.1")
    assert code == 0
    assert json.loads(out)["overall_pass"] is True


def test_verify_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "exact", "--nmax", "-1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "exact", "--k0", "abc"])
    assert exc.value.code == 2


def test_verify_json_deterministic_modulo_timing(capsys):
    _, out1, _ = run_cli(capsys, "verify", "exact", "--nmax", "3")
    _, out2, _ = run_cli(capsys, "verify", "exact", "--nmax", "3")
    p1, p2 = json.loads(out1), json.loads(out2)
    p1.pop("elapsed_s")
    p2.pop("elapsed_s")
    assert json.dumps(p1) == json.dumps(p2)


def test_verify_csv_and_text_formats(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "exact", "--nmax", "1", "--format", "csv"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,expected,got,tolerance,pass"
    code, out, _ = run_cli(
        capsys, "verify", "exact", "--nmax", "1", "--format", "text"
    )
    assert code == 0
    assert "overall: PASS" in out


def test_table_symbolic_defaults(capsys):
    code, out, _ = run_cli(capsys, "table", "--nmax", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,alpha,beta,s_p12,s_p14"
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "1"


def test_table_rational_substitution(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--k0", "0", "--k1", "0", "--nmax", "1", "--format", "csv"
    )
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert rows[0][1] == "1"
    assert rows[1][1] == "1/2"  # the Wallis value at n = 1


def test_table_json_format(capsys):
    code, out, _ = run_cli(capsys, "table", "--nmax", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["alpha"] == "1"


def test_eval_k_payload(capsys):
    code, out, _ = run_cli(
        capsys, "eval-k", "--k0", "0", "--k1", "0", "--theta", "0.5"
    )
    assert code == 0
    payload = json.loads(out)
    inv_2pi = 1 / (2 * math.pi)
    assert payload["K"][0] == pytest.approx(inv_2pi, abs=1e-14)
    assert payload["K"][1] == pytest.approx(0.0, abs=1e-14)
    assert payload["K"][2] == pytest.approx(inv_2pi, abs=1e-14)
    assert len(payload["L"]) == 4
    k11, k12, k22 = payload["K"]
    assert payload["detK"] == pytest.approx(k11 * k22 - k12 * k12, abs=1e-12)


def test_eval_k_matches_determinant_formula(capsys):
    code, out, _ = run_cli(
        capsys, "eval-k", "--k0", "0.3", "--k1", "0.1", "--theta", "0.4"
    )
    assert code == 0
    payload = json.loads(out)
    expected = math.cos(0.4 * math.pi) * math.cos(0.2 * math.pi) / (4 * math.pi**2)
    assert payload["detK"] == pytest.approx(expected, abs=1e-12)


def test_eval_k_region_failures_exit_1(capsys):
    code, _, err = run_cli(
        capsys, "eval-k", "--k0", "0.3", "--k1", "0.1", "--theta", "1.0"
    )
    assert code == 1 and "error" in err
    code, _, err = run_cli(
        capsys, "eval-k", "--k0", "0.3", "--k1", "0.3", "--theta", "0.4"
    )
    assert code == 1 and "error" in err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "exact", "--nmax", "1", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["overall_pass"] is True
