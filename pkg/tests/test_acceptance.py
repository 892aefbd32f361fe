"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s``.

Criterion 1 is currently red, and deliberately so: C14d.h_mehler compares the
diagonal bilinear sum over the Hahn family against its displayed closed form,
and the two genuinely differ at order t (the engine reports the exact
rational witness; the same closed form does match the reversed-companion
bilinear sum, which the check verifies first).  The discrepancy is a property
of the identity under test, not of the comparator, so the check reports it
rather than being weakened to pass.  Every other criterion passes.
"""

import json
import time
from fractions import Fraction as F

import pytest

import qhahn.checks as checks
from qhahn.cli import main as cli_main
from qhahn.families import cauchy_p_general, cauchy_product, hahn_h
from qhahn.polyring import Polynomial
from qhahn.pseries import ScaledMonomial
from qhahn.qkernel import q_binomial, q_pochhammer
from qhahn.qoperators import (
    apply_operator,
    dq_power,
    e_tilde,
    l_tilde,
    theta_power,
    theta_power_on_cauchy,
)
from qhahn.verify import check_names, default_configs, run_check

X = Polynomial.variable("x")
Y = Polynomial.variable("y")
HEAVY_CHECKS = ("C10.E_triple_sum", "C14d.h_mehler")


def _report(number, name, ok, extra=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" - {extra}" if extra else ""
    print(f"ACCEPTANCE {number} ({name}): {status}{suffix}")


def test_criterion_1_exact_identity_suite():
    names = [n for n in check_names() if not n.startswith("C15")]
    start = time.perf_counter()
    results = [
        run_check(name, config)
        for config in default_configs()
        for name in names
    ]
    total = time.perf_counter() - start
    failures = [r for r in results if r.status != "pass" or r.witness is not None]
    heavy_slow = [
        r for r in results if r.name in HEAVY_CHECKS and r.elapsed >= 20.0
    ]
    runtime_ok = total < 60.0 and not heavy_slow
    detail = f"{len(results) - len(failures)}/{len(results)} pass in {total:.1f}s"
    if failures:
        first = failures[0]
        witness = first.witness
        detail += (
            f"; first failure {first.name}"
            + (f" [{witness.part}]" if witness and witness.part else "")
            + (
                f" witness {witness.monomial}: {witness.lhs} vs {witness.rhs}"
                if witness
                else f" ({first.detail})"
            )
        )
    _report(1, "exact identity suite C1-C14d, both parameter sets",
            not failures and runtime_ok, detail)
    assert runtime_ok, f"runtime budget exceeded: {detail}"
    assert not failures, detail


@pytest.mark.parametrize("config_index", [0, 1])
def test_criterion_2_operator_family_equivalence(config_index):
    config = default_configs()[config_index]
    q = config.q
    a = config.params["a"]
    b = config.params["b"]
    y_mono = ScaledMonomial.of(1, y=1)
    ok = True
    for n in range(9):
        built = apply_operator(e_tilde(a, y_mono, q, "x"), X**n)
        ok = ok and built == cauchy_p_general(n, q, a)
        applied = apply_operator(l_tilde(a, b, q), cauchy_product(n, q, Y, X))
        ok = ok and applied == hahn_h(n, q, a, b)
    _report(2, f"operator/family equivalence, set {config_index + 1}", ok)
    assert ok


def test_criterion_3_oracle_equivalences():
    ok = True
    for q in (F(1, 2), F(2, 3)):
        for n in range(7):
            base = cauchy_product(n, q, Y, X)
            for k in range(n + 1):
                ok = ok and theta_power_on_cauchy(n, k, q) == theta_power(base, q, k)
        for n in range(13):
            for k in range(n + 1):
                oracle = q_pochhammer(q, q, n) / (
                    q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k)
                )
                ok = ok and q_binomial(n, k, q) == oracle
        for k in range(7):
            for n in range(k + 1):
                closed = (X ** (k - n)).scale(q_pochhammer(q ** (k - n + 1), q, n))
                ok = ok and dq_power(X**k, "x", q, n) == closed
    _report(3, "oracle equivalences (theta, q-binomial, q-derivative)", ok)
    assert ok


def test_criterion_4_randomized_leibniz_and_auxiliary_sum():
    ok = True
    for config in default_configs():
        for name in ("C5.leibniz", "C5b.vandermonde_aux"):
            result = run_check(name, config)
            ok = ok and result.status == "pass" and result.witness is None
    _report(4, "randomized Leibniz rule and auxiliary sum, both sets", ok)
    assert ok


def test_criterion_5_numeric_mode():
    results = [run_check("C15.numeric_spot", c) for c in default_configs()]
    ok = all(r.status == "pass" for r in results)
    fast = all(r.elapsed < 5.0 for r in results)
    detail = ", ".join(f"{r.elapsed:.2f}s" for r in results)
    _report(5, "certified numeric spot checks at |xt| < 1", ok and fast, detail)
    assert ok and fast
    # the stated evaluation point backs the first mandated set
    config = default_configs()[0]
    assert config.q == F(1, 2) and config.params["a"] == F(1, 7)
    assert checks._PARAM_DEFAULTS["x"] == F(1, 3)
    assert checks._PARAM_DEFAULTS["y"] == F(1, 5)
    assert checks._PARAM_DEFAULTS["t"] == F(1, 2)
    assert abs(F(1, 3) * F(1, 2)) < 1


def test_criterion_6_mutation_sensitivity(monkeypatch):
    config = default_configs()[0]
    monkeypatch.setattr(checks, "_LHS_B_PERTURBATION", F(1, 1000))
    result = run_check("C14a.h_gf", config)
    ok = (
        result.status == "fail"
        and result.witness is not None
        and result.witness.monomial[4] == 1
    )
    _report(6, "mutation sensitivity: perturbed family makes C14a fail", ok)
    assert ok
    monkeypatch.undo()
    assert run_check("C14a.h_gf", config).status == "pass"


def test_criterion_7_byte_identical_reports(capsys, monkeypatch):
    argv = ["verify", "--json"]
    outputs = []
    codes = []
    for threads in ("1", "8", "1"):
        monkeypatch.setenv("QHAHN_THREADS", threads)
        codes.append(cli_main(list(argv)))
        outputs.append(capsys.readouterr().out)
    ok = outputs[0] == outputs[1] == outputs[2] and len(set(codes)) == 1
    with capsys.disabled():
        _report(7, "deterministic JSON reports across runs and thread counts", ok)
    assert ok
    parsed = json.loads(outputs[0])
    assert parsed["suite_version"]
    assert len(parsed["runs"]) == 2
