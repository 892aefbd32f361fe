import json

from qhahn.cli import main
from qhahn.verify import registered_checks


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_cauchy_canonical_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "cauchy", "--n", "2", "--q", "1/2")
    assert code == 0
    assert out == "x^2 - 3/2*x*y + 1/2*y^2\n"


def test_poly_hahn_with_params(capsys):
    code, out, _ = run_cli(
        capsys, "poly", "hahn", "--n", "1", "--q", "1/2", "--params", "a=1/7,b=1/3"
    )
    assert code == 0
    assert out == "-x + y - 2/7\n"


def test_poly_json_terms(capsys):
    code, out, _ = run_cli(capsys, "poly", "cauchy", "--n", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["terms"] == [[[1, 0, 0, 0, 0, 0], "1"], [[0, 1, 0, 0, 0, 0], "-1"]]


def test_eval_qpochinf_trivial(capsys):
    code, out, _ = run_cli(capsys, "eval", "qpochinf", "--a", "0", "--q", "1/2")
    assert code == 0
    assert out == "1 ± 0\n"


def test_eval_exact_quantities(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "qbinom", "--n", "4", "--k", "2", "--q", "1/2"
    )
    assert code == 0
    assert out == "35/16 ± 0\n"
    code, out, _ = run_cli(
        capsys, "eval", "qpoch", "--a", "1/2", "--q", "1/2", "--n", "2", "--json"
    )
    assert code == 0
    assert json.loads(out) == {"approx": "3/8", "bound": "0"}


def test_eval_decimal_preview(capsys):
    code, out, _ = run_cli(
        capsys,
        "eval", "qpochinf", "--a", "1/2", "--q", "1/2",
        "--eps", "1/10^20", "--digits", "6",
    )
    assert code == 0
    assert "≈ 0.288788" in out


def test_verify_single_check_exit_zero(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--check", "C3.cauchy_gf", "--q", "1/2", "--order-t", "8",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("pass  C3.cauchy_gf")
    assert lines[-1] == "1/1 checks passed"


def test_verify_failing_check_exit_one(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--check", "C14d.h_mehler", "--q", "1/2",
        "--order-t", "5", "--order-s", "5",
    )
    assert code == 1
    assert "fail" in out


def test_verify_csv_output(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--check", "C1.euler_pair", "--q", "1/2", "--csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "name,status,elapsed_ms"


def test_usage_errors_exit_two(capsys):
    code, _, _ = run_cli(capsys, "verify", "--q", "0.5")
    assert code == 2
    code, _, _ = run_cli(capsys, "verify", "--check", "NOPE*")
    assert code == 2
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run_cli(capsys, "poly", "cauchy", "--n", "-1")
    assert code == 2


def test_list_names_every_check(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    for name, _description in registered_checks():
        assert name in out


def test_list_json(capsys):
    code, out, _ = run_cli(capsys, "list", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["name"] == "C1.euler_pair"


def test_report_writes_json_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        "report", "--out", str(target),
        "--check", "C3*", "--q", "1/2", "--order-t", "5", "--order-s", "5",
    )
    assert code == 0
    assert "wrote" in out
    doc = json.loads(target.read_text())
    assert doc["runs"][0]["results"][0]["name"] == "C3.cauchy_gf"


def test_verify_json_runs_are_byte_identical(capsys, monkeypatch):
    argv = [
        "verify", "--json", "--check", "C2*",
        "--order-t", "5", "--order-s", "5",
    ]
    monkeypatch.setenv("QHAHN_THREADS", "1")
    code_a, out_a, _ = run_cli(capsys, *argv)
    monkeypatch.setenv("QHAHN_THREADS", "8")
    code_b, out_b, _ = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b
    parsed = json.loads(out_a)
    assert json.dumps(parsed, indent=2) + "\n" == out_a
