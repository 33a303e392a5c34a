"""Plays the pile game literally and aggregates win/step statistics.

Determinism contract: every result is a pure function of
(n, trials, seed, workers, ci_level). Trials are split into ``workers``
contiguous blocks; block i draws from a private generator stream seeded
with splitmix64(seed XOR (i + 1)), and per-block tallies are merged by
integer addition. Neither OS scheduling nor the size of the process pool
can therefore affect the numbers -- a single-process run of the same
partition gives bit-identical output.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .rng import MASK64, expand_seed, splitmix64

#: z-values for the supported two-sided confidence levels. Levels outside
#: this table are rejected rather than approximated with an inverse-normal
#: evaluation.
Z_BY_LEVEL = {
    0.90: 1.6448536269514722,
    0.95: 1.959963984540054,
    0.99: 2.5758293035489004,
    0.999: 3.2905267314919255,
}

#: Below this many trials the process-pool overhead dominates; blocks are
#: then run inline (the partition, and hence the result, is unchanged).
_INLINE_TRIALS_LIMIT = 100_000


class Move(NamedTuple):
    player: str  # "R" or "D"
    removed: int
    remaining: int


@dataclass(frozen=True)
class GameTranscript:
    """One complete playout: every move, the winner, and the R-move count."""

    initial_n: int
    moves: tuple[Move, ...]
    winner: str
    r_steps: int


@dataclass(frozen=True)
class TrialSums:
    """Mergeable tallies over a batch of games (addition is the merge)."""

    d_wins: int
    steps_sum: int
    steps_sq_sum: int


@dataclass(frozen=True)
class SimResult:
    """Aggregated statistics for one simulation run."""

    n: int
    trials: int
    d_wins: int
    p_hat: float
    ci_low: float
    ci_high: float
    ci_level: float
    mean_r_steps: float
    seed: int
    workers: int

    def __post_init__(self) -> None:
        if not 0 <= self.d_wins <= self.trials:
            raise ValueError(f"d_wins={self.d_wins} outside 0..{self.trials}")
        if not 0.0 <= self.ci_low <= self.p_hat <= self.ci_high <= 1.0:
            raise ValueError(
                f"interval ({self.ci_low}, {self.ci_high}) does not "
                f"bracket p_hat={self.p_hat}"
            )


def play_game(n: int, rng) -> GameTranscript:
    """Play one game from a pile of ``n`` counters.

    The random player moves first, drawing its removal via ``rng.draw(pile)``
    (uniform on {1..pile}); the deterministic player removes exactly one.
    Whoever empties the pile wins. Deterministic given the rng state.

    Args:
        n: Initial pile size, at least 1.
        rng: Any object with a ``draw(m) -> int in 1..m`` method.

    Returns:
        The full transcript, including the per-move pile sizes.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    moves = []
    pile = n
    r_steps = 0
    while True:
        k = rng.draw(pile)
        pile -= k
        r_steps += 1
        moves.append(Move("R", k, pile))
        if pile == 0:
            winner = "R"
            break
        pile -= 1
        moves.append(Move("D", 1, pile))
        if pile == 0:
            winner = "D"
            break
    return GameTranscript(initial_n=n, moves=tuple(moves), winner=winner, r_steps=r_steps)


def _run_block(n: int, count: int, state: tuple[int, int, int, int]) -> tuple[int, int, int]:
    """Play ``count`` games from pile ``n`` on one generator stream.

    Hot path: the xoshiro256** step and the game loop are inlined here and
    must consume the stream exactly like ``play_game`` over a
    ``Xoshiro256StarStar`` (test_simulate pins that equivalence). Returns
    (deterministic wins, sum of R-move counts, sum of squared counts).
    """
    s0, s1, s2, s3 = state
    d_wins = 0
    steps_sum = 0
    steps_sq_sum = 0
    for _ in range(count):
        pile = n
        r_steps = 0
        while True:
            shift = 64 - (pile - 1).bit_length()
            while True:
                x = (s1 * 5) & MASK64
                out = (((x << 7) | (x >> 57)) & MASK64) * 9 & MASK64
                t = (s1 << 17) & MASK64
                s2 ^= s0
                s3 ^= s1
                s1 ^= s2
                s0 ^= s3
                s2 ^= t
                s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
                v = out >> shift
                if v < pile:
                    break
            r_steps += 1
            pile -= v + 1
            if pile == 0:
                break
            pile -= 1
            if pile == 0:
                d_wins += 1
                break
        steps_sum += r_steps
        steps_sq_sum += r_steps * r_steps
    return d_wins, steps_sum, steps_sq_sum


def stream_seed(seed: int, worker: int) -> int:
    """Seed of worker ``worker``'s private stream (0-based index)."""
    return splitmix64((seed ^ (worker + 1)) & MASK64)


def block_sizes(trials: int, workers: int) -> list[int]:
    """Contiguous block sizes: trials split as evenly as possible."""
    base, extra = divmod(trials, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def run_trial_sums(n: int, trials: int, seed: int = 0, workers: int = 1) -> TrialSums:
    """Raw tallies over ``trials`` independent games; core of ``run_trials``.

    Exposed separately so callers that need the second moment of the step
    count (for an empirical variance) can get it from the same single pass.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    jobs = [
        (size, expand_seed(stream_seed(seed, i)))
        for i, size in enumerate(block_sizes(trials, workers))
        if size > 0
    ]
    if len(jobs) == 1 or trials <= _INLINE_TRIALS_LIMIT:
        parts = [_run_block(n, size, state) for size, state in jobs]
    else:
        pool_size = min(len(jobs), os.cpu_count() or 1)
        with ProcessPoolExecutor(max_workers=pool_size) as pool:
            futures = [pool.submit(_run_block, n, size, state) for size, state in jobs]
            parts = [future.result() for future in futures]
    return TrialSums(
        d_wins=sum(p[0] for p in parts),
        steps_sum=sum(p[1] for p in parts),
        steps_sq_sum=sum(p[2] for p in parts),
    )


def run_trials(
    n: int,
    trials: int,
    seed: int = 0,
    workers: int = 1,
    ci_level: float = 0.99,
) -> SimResult:
    """Play ``trials`` games and report the deterministic player's win rate.

    Args:
        n: Initial pile size, at least 1.
        trials: Number of independent games, at least 1.
        seed: Unsigned 64-bit master seed.
        workers: Number of contiguous trial blocks / generator streams.
        ci_level: Confidence level for the Wilson interval; must be one of
            the keys of ``Z_BY_LEVEL``.

    Returns:
        A SimResult; bit-identical for identical argument tuples.
    """
    if ci_level not in Z_BY_LEVEL:
        raise ValueError(
            f"unsupported ci_level {ci_level}; choose from {sorted(Z_BY_LEVEL)}"
        )
    sums = run_trial_sums(n, trials, seed=seed, workers=workers)
    ci_low, ci_high = wilson_interval(sums.d_wins, trials, ci_level)
    return SimResult(
        n=n,
        trials=trials,
        d_wins=sums.d_wins,
        p_hat=sums.d_wins / trials,
        ci_low=ci_low,
        ci_high=ci_high,
        ci_level=ci_level,
        mean_r_steps=sums.steps_sum / trials,
        seed=seed,
        workers=workers,
    )


def wilson_interval(wins: int, trials: int, ci_level: float = 0.99) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion.

    Well-behaved near 0 and 1: zero successes pin the lower bound at
    exactly 0.0 and all successes pin the upper bound at exactly 1.0.

    Args:
        wins: Number of successes, 0 <= wins <= trials.
        trials: Number of Bernoulli trials, at least 1.
        ci_level: One of the levels in ``Z_BY_LEVEL``.

    Returns:
        (low, high) with low <= wins/trials <= high.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 0 <= wins <= trials:
        raise ValueError(f"wins={wins} outside 0..{trials}")
    if ci_level not in Z_BY_LEVEL:
        raise ValueError(
            f"unsupported ci_level {ci_level}; choose from {sorted(Z_BY_LEVEL)}"
        )
    z = Z_BY_LEVEL[ci_level]
    p_hat = wins / trials
    denom = 1.0 + z * z / trials
    center = (p_hat + z * z / (2.0 * trials)) / denom
    half = z * math.sqrt(p_hat * (1.0 - p_hat) / trials + z * z / (4.0 * trials * trials)) / denom
    low = 0.0 if wins == 0 else max(0.0, center - half)
    high = 1.0 if wins == trials else min(1.0, center + half)
    return low, high
