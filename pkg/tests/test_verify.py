"""Tests for the named cross-check machinery, including tamper detection."""

import dataclasses
from fractions import Fraction

import pytest

from pilegame.exact import derangements, solve_recursive
from pilegame.steps import expected_steps, q_sequence
from pilegame.verify import (
    CheckResult,
    check_alternating_bound,
    check_base_cases,
    check_derangement_identity,
    check_limit_gap,
    check_oracle_steps,
    check_oracle_win_prob,
    check_q_recursion,
    check_steps_vs_q,
    check_tables_equal,
    check_telescoping_differences,
    run_checks,
)

EXPECTED_IDS = [
    "base-cases",
    "recursive-vs-telescoping",
    "recursive-vs-closed-form",
    "recursive-vs-gf",
    "telescoping-vs-closed-form",
    "telescoping-vs-gf",
    "closed-form-vs-gf",
    "derangement-identity",
    "telescoping-differences",
    "oracle-win-prob",
    "oracle-win-prob-no-memo",
    "oracle-steps",
    "q-recursion",
    "steps-vs-q-recursion",
    "alternating-bound",
    "limit-gap",
]


def _corrupt_table(table, n, value):
    r = list(table.r)
    r[n] = value
    return dataclasses.replace(table, r=tuple(r))


def test_all_checks_pass_on_honest_inputs():
    results = run_checks(n_max=60, oracle_max=8)
    assert [r.check_id for r in results] == EXPECTED_IDS
    assert all(r.passed for r in results), [str(r) for r in results if not r.passed]


def test_run_checks_validates_arguments():
    with pytest.raises(ValueError):
        run_checks(n_max=1, oracle_max=1)
    with pytest.raises(ValueError):
        run_checks(n_max=200, oracle_max=15)
    with pytest.raises(ValueError):
        run_checks(n_max=10, oracle_max=12)


def test_check_result_renders_both_ways():
    assert str(CheckResult("x", True)) == "PASS x"
    assert str(CheckResult("x", False, "broke at n=3")) == "FAIL x: broke at n=3"


def test_tampered_table_fails_pairwise_check():
    honest = solve_recursive(20)
    tampered = _corrupt_table(solve_recursive(20), 10, Fraction(1, 3))
    result = check_tables_equal("recursive-vs-recursive", honest, tampered)
    assert not result.passed
    assert "n=10" in result.detail


def test_tampered_table_fails_base_cases():
    tampered = _corrupt_table(solve_recursive(5), 3, Fraction(1))
    # base cases themselves are still intact, so that check passes ...
    assert check_base_cases(tampered).passed
    # ... but the telescoping difference law localizes the damage.
    result = check_telescoping_differences(tampered)
    assert not result.passed
    assert "n=3" in result.detail


def test_tampered_derangements_fail_identity():
    table = solve_recursive(12)
    dtable = derangements(12)
    d = list(dtable.d)
    d[5] += 120  # keep d_5/5! inside [0, 1] but wrong
    tampered = dataclasses.replace(dtable, d=tuple(d))
    result = check_derangement_identity(table, tampered)
    assert not result.passed
    assert "n=5" in result.detail


def test_tampered_table_fails_oracle_comparison():
    tampered = _corrupt_table(solve_recursive(8), 6, Fraction(1, 2))
    result = check_oracle_win_prob(tampered, 8, memoize=True)
    assert not result.passed
    assert "n=6" in result.detail


def test_tampered_steps_fail_oracle_comparison():
    steps = expected_steps(8)
    ez = list(steps.ez)
    eq = list(steps.eq)
    ez[5] += Fraction(1, 7)  # n = 6; both neighbouring differences shift
    eq[4] += Fraction(1, 7)
    eq[5] -= Fraction(1, 7)
    tampered = dataclasses.replace(steps, ez=tuple(ez), eq=tuple(eq))
    result = check_oracle_steps(tampered, 8)
    assert not result.passed
    assert "n=6" in result.detail


def test_tampered_q_sequence_fails_recursion():
    seq = list(q_sequence(30))
    seq[10] += Fraction(1, 1000)  # n = 12
    result = check_q_recursion(tuple(seq))
    assert not result.passed
    assert "n=12" in result.detail


def test_tampered_q_sequence_fails_consistency():
    steps = expected_steps(30)
    seq = list(q_sequence(30))
    seq[3] += Fraction(1, 1000)  # n = 5
    result = check_steps_vs_q(steps, tuple(seq))
    assert not result.passed
    assert "n=5" in result.detail


def test_tampered_table_fails_alternating_bound():
    tampered = _corrupt_table(solve_recursive(20), 10, Fraction(1, 3))
    result = check_alternating_bound(tampered)
    assert not result.passed
    assert "n=" in result.detail and "m=" in result.detail


def test_tampered_table_fails_limit_gap():
    tampered = _corrupt_table(solve_recursive(20), 15, Fraction(1, 4))
    result = check_limit_gap(tampered)
    assert not result.passed
    assert "n=15" in result.detail
