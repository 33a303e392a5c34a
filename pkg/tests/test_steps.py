"""Tests for the expected random-player move counts."""

from fractions import Fraction

import pytest

from pilegame.steps import StepsTable, expected_steps, q_sequence
from reference import BRUTE_EQ, BRUTE_EZ


def test_base_cases():
    table = expected_steps(2)
    assert table.ez == (Fraction(1), Fraction(1))
    assert table.eq == (Fraction(0),)


def test_single_entry_table():
    table = expected_steps(1)
    assert table.ez == (Fraction(1),)
    assert table.eq == ()


def test_matches_brute_force():
    table = expected_steps(8)
    for n, expected in BRUTE_EZ.items():
        assert table.ez_at(n) == expected, f"E(Z_{n})"
    for n, expected in BRUTE_EQ.items():
        assert table.eq_at(n) == expected, f"E(Q_{n})"


def test_known_values():
    table = expected_steps(5)
    assert table.ez_at(3) == Fraction(4, 3)
    assert table.ez_at(4) == Fraction(3, 2)
    assert table.ez_at(5) == Fraction(5, 3)


def test_rejects_bad_n_max():
    with pytest.raises(ValueError):
        expected_steps(0)
    with pytest.raises(ValueError):
        q_sequence(1)


def test_q_sequence_values():
    seq = q_sequence(5)
    assert seq == (Fraction(0), Fraction(1, 3), Fraction(1, 6), Fraction(1, 6))


def test_q_sequence_first_order_identity():
    seq = q_sequence(200)
    assert seq[0] == 0
    for i in range(1, len(seq)):
        n = i + 2
        assert n * seq[i] == 1 - seq[i - 1], f"n={n}"


def test_q_sequence_matches_difference_table():
    """The two derivations of E(Q_n) agree exactly up to n = 200."""
    table = expected_steps(200)
    seq = q_sequence(200)
    for i, value in enumerate(seq):
        assert table.eq_at(i + 2) == value, f"n={i + 2}"


def test_steps_strictly_increase_from_three():
    table = expected_steps(200)
    for n in range(3, 201):
        assert 0 < table.eq_at(n) < 1, f"n={n}"
    assert table.eq_at(2) == 0


def test_accessor_bounds():
    table = expected_steps(4)
    with pytest.raises(IndexError):
        table.ez_at(0)
    with pytest.raises(IndexError):
        table.ez_at(5)
    with pytest.raises(IndexError):
        table.eq_at(1)
    with pytest.raises(IndexError):
        table.eq_at(5)


def test_table_validation():
    with pytest.raises(ValueError):
        StepsTable(n_max=2, ez=(Fraction(2), Fraction(1)), eq=(Fraction(-1),))
    with pytest.raises(ValueError):
        StepsTable(n_max=2, ez=(Fraction(1),), eq=())
    with pytest.raises(ValueError):
        StepsTable(
            n_max=2,
            ez=(Fraction(1), Fraction(1)),
            eq=(Fraction(1, 2),),  # not the consecutive difference
        )
