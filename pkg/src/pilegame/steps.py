"""Expected number of moves the random player makes in one game.

Z_n counts only the random player's moves in a game started from n
counters (the deterministic player's forced removals are not counted).
E(Z_n) satisfies

    E(Z_n) = 1 + (1/n) * sum_{k=1}^{n-2} E(Z_k)      for n >= 3,

with E(Z_1) = E(Z_2) = 1 by direct enumeration of the rules: with one
counter the random player clears the pile immediately, and with two it
moves exactly once whichever value it draws. The difference sequence
Q_n = Z_n - Z_{n-1} obeys the first-order recursion n*E(Q_n) = 1 - E(Q_{n-1})
starting from E(Q_2) = 0, which ``q_sequence`` iterates independently so the
two derivations can be cross-checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ONE = Fraction(1)


@dataclass(frozen=True)
class StepsTable:
    """Exact E(Z_n) for n = 1..n_max and E(Q_n) for n = 2..n_max.

    ``ez[i]`` holds E(Z_{i+1}) and ``eq[i]`` holds E(Q_{i+2}); use
    ``ez_at``/``eq_at`` to index by pile size directly.
    """

    n_max: int
    ez: tuple[Fraction, ...]
    eq: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if len(self.ez) != self.n_max or len(self.eq) != max(self.n_max - 1, 0):
            raise ValueError("table lengths do not match n_max")
        if self.ez[0] != 1:
            raise ValueError(f"E(Z_1) must be 1, got {self.ez[0]}")
        if self.n_max >= 2 and self.ez[1] != 1:
            raise ValueError(f"E(Z_2) must be 1, got {self.ez[1]}")
        if any(value < 1 for value in self.ez):
            raise ValueError("every E(Z_n) is at least 1: one move always happens")
        for i, delta in enumerate(self.eq):
            if delta != self.ez[i + 1] - self.ez[i]:
                raise ValueError(
                    f"E(Q_{i + 2}) = {delta} is not the difference of "
                    f"consecutive E(Z) entries"
                )

    def ez_at(self, n: int) -> Fraction:
        """E(Z_n); n must be in 1..n_max."""
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range 1..{self.n_max}")
        return self.ez[n - 1]

    def eq_at(self, n: int) -> Fraction:
        """E(Q_n) = E(Z_n) - E(Z_{n-1}); n must be in 2..n_max."""
        if not 2 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range 2..{self.n_max}")
        return self.eq[n - 2]


def expected_steps(n_max: int) -> StepsTable:
    """Exact E(Z_n) for 1..n_max via the summed recursion.

    Maintains the running prefix sum E(Z_1) + ... + E(Z_{n-2}) so the whole
    table is built in linear time; ``eq`` is filled with the consecutive
    differences.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    ez = [_ONE]
    if n_max >= 2:
        ez.append(_ONE)
    prefix = _ONE  # sum of ez[1..n-2] while computing ez[n]; starts at n=3
    for n in range(3, n_max + 1):
        ez.append(1 + prefix / n)
        prefix += ez[n - 2]  # extend the sum to ez[1..n-1] for the next n
    eq = tuple(ez[i + 1] - ez[i] for i in range(len(ez) - 1))
    return StepsTable(n_max=n_max, ez=tuple(ez), eq=eq)


def q_sequence(n_max: int) -> tuple[Fraction, ...]:
    """E(Q_n) for n = 2..n_max by the first-order recursion alone.

    Iterates E(Q_n) = (1 - E(Q_{n-1}))/n from E(Q_2) = 0, never touching
    ``expected_steps``; element i of the result corresponds to n = i + 2.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    values = [Fraction(0)]
    for n in range(3, n_max + 1):
        values.append((1 - values[-1]) / n)
    return tuple(values)
