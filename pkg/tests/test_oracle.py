"""Tests for the exhaustive game-tree oracle."""

from fractions import Fraction

import pytest

from pilegame.exact import solve_recursive
from pilegame.oracle import (
    evaluate,
    oracle_expected_steps,
    oracle_win_prob,
)
from pilegame.steps import expected_steps
from reference import (
    BRUTE_DERANGEMENTS,
    BRUTE_EZ,
    BRUTE_R,
    brute_force_game,
    count_derangements_by_enumeration,
)


def test_reference_self_check():
    """Re-derive the frozen reference tables from the brute-force routines."""
    for n in range(1, 9):
        d_prob, ez = brute_force_game(n)
        assert d_prob == 1 - BRUTE_R[n], f"n={n}"
        assert ez == BRUTE_EZ[n], f"n={n}"
    for n in range(8):
        assert count_derangements_by_enumeration(n) == BRUTE_DERANGEMENTS[n]


def test_win_prob_matches_brute_force():
    for n in range(1, 9):
        assert oracle_win_prob(n) == 1 - BRUTE_R[n], f"n={n}"


def test_win_prob_known_values():
    assert oracle_win_prob(0) == 1  # boundary convention
    assert oracle_win_prob(2) == Fraction(1, 2)
    assert oracle_win_prob(5) == Fraction(11, 30)


def test_expected_steps_known_values():
    assert oracle_expected_steps(1) == 1
    assert oracle_expected_steps(2) == 1
    assert oracle_expected_steps(4) == Fraction(3, 2)


def test_expected_steps_matches_brute_force():
    for n in range(1, 9):
        assert oracle_expected_steps(n) == BRUTE_EZ[n], f"n={n}"


def test_memoized_and_unmemoized_agree():
    for n in range(11):
        assert evaluate(n, memoize=True) == evaluate(n, memoize=False), f"n={n}"


def test_matches_analytic_solver_up_to_limit():
    table = solve_recursive(14)
    steps = expected_steps(14)
    for n in range(15):
        assert oracle_win_prob(n) == table.d(n), f"n={n}"
    for n in range(1, 15):
        assert oracle_expected_steps(n) == steps.ez_at(n), f"n={n}"


def test_depth_guards():
    with pytest.raises(ValueError):
        oracle_win_prob(15)
    with pytest.raises(ValueError):
        oracle_win_prob(11, memoize=False)
    with pytest.raises(ValueError):
        evaluate(15)
    evaluate(14)  # at the limit: allowed
    evaluate(10, memoize=False)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        evaluate(-1)
    with pytest.raises(ValueError):
        oracle_expected_steps(0)


def test_zero_pile_result():
    result = evaluate(0)
    assert result.d_win_prob == 1
    assert result.expected_r_steps is None
