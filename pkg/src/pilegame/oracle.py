"""Ground truth by exhaustive game-tree expectation.

Expands every branch of the game literally: at a random-player node with m
counters each removal k in {1..m} carries weight 1/m, and a
deterministic-player node has its single forced move. No win-probability or
step recurrence appears anywhere in this module, which is what makes it an
independent check on the analytic solvers.

Memoization caches values per (pile, player-to-move) state; it changes cost
only, not semantics, and can be switched off to keep the evaluation a pure
tree walk. The walk grows roughly like a Fibonacci sequence in n, so both
modes carry a small-n guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

#: Largest n accepted with the (pile, player) cache enabled.
MEMOIZED_MAX_N = 14

#: Largest n accepted for the pure, cache-free tree walk.
UNMEMOIZED_MAX_N = 10

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class OracleResult:
    """Exact quantities for one starting pile size.

    ``expected_r_steps`` is None only for n = 0, where no game is played
    and the win probability is fixed by convention.
    """

    n: int
    d_win_prob: Fraction
    expected_r_steps: Fraction | None


def _walk(
    pile: int,
    to_move: str,
    cache: dict[tuple[int, str], tuple[Fraction, Fraction]] | None,
) -> tuple[Fraction, Fraction]:
    """(P(deterministic player wins), E(remaining R moves)) for a live state."""
    if cache is not None:
        hit = cache.get((pile, to_move))
        if hit is not None:
            return hit
    if to_move == "R":
        weight = Fraction(1, pile)
        weight_total = _ZERO
        d_prob = _ZERO
        r_moves = _ZERO
        for k in range(1, pile + 1):
            weight_total += weight
            left = pile - k
            if left == 0:
                branch = (_ZERO, _ONE)  # random player emptied the pile
            else:
                sub_d, sub_steps = _walk(left, "D", cache)
                branch = (sub_d, 1 + sub_steps)
            d_prob += weight * branch[0]
            r_moves += weight * branch[1]
        if weight_total != 1:
            raise AssertionError(f"branch weights sum to {weight_total}, not 1")
        result = (d_prob, r_moves)
    else:
        left = pile - 1
        result = (_ONE, _ZERO) if left == 0 else _walk(left, "R", cache)
    if cache is not None:
        cache[(pile, to_move)] = result
    return result


def _check_depth(n: int, memoize: bool) -> None:
    limit = MEMOIZED_MAX_N if memoize else UNMEMOIZED_MAX_N
    if n > limit:
        mode = "memoized" if memoize else "unmemoized"
        raise ValueError(f"n={n} exceeds the {mode} enumeration limit of {limit}")


def evaluate(n: int, memoize: bool = True) -> OracleResult:
    """Full tree evaluation for a game starting from ``n`` counters.

    n = 0 is the boundary convention: the random player cannot win a game
    it never gets to play, so the deterministic player's probability is 1
    and there is no step count.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_depth(n, memoize)
    if n == 0:
        return OracleResult(n=0, d_win_prob=_ONE, expected_r_steps=None)
    d_prob, r_moves = _walk(n, "R", {} if memoize else None)
    return OracleResult(n=n, d_win_prob=d_prob, expected_r_steps=r_moves)


def oracle_win_prob(n: int, memoize: bool = True) -> Fraction:
    """Exact probability that the deterministic player wins from ``n``."""
    return evaluate(n, memoize=memoize).d_win_prob


def oracle_expected_steps(n: int, memoize: bool = True) -> Fraction:
    """Exact expected number of random-player moves from ``n`` (n >= 1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    result = evaluate(n, memoize=memoize)
    assert result.expected_r_steps is not None
    return result.expected_r_steps
