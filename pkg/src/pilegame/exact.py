"""Exact win probabilities for the random-vs-deterministic pile game.

A pile starts with n counters. The random player moves first and removes a
uniformly random number of counters from {1, ..., m} when m remain; the
deterministic player always removes exactly one; whoever empties the pile
wins. R_n is the probability that the random player wins from n counters
and D_n = 1 - R_n the probability that the deterministic player wins.

R_n is computed four independent ways, all in exact rational arithmetic:

* ``solve_recursive``   -- two-term recurrence n*R_n = R_{n-2} + (n-1)*R_{n-1}
* ``solve_telescoping`` -- first-order recursion on differences R_n - R_{n-1}
* ``closed_form``       -- alternating partial sum R_n = 1 - sum_{k<=n} (-1)^k/k!
* ``gf_coefficients``   -- coefficient extraction from a power-series product

D_n equals d_n/n! where d_n counts fixed-point-free permutations of n items,
so the module also builds derangement tables, and D_n converges to 1/e with
alternating-series rate 1/(n+1)!; ``gap_to_limit`` measures that gap.

Floating point appears only in ``gap_to_limit`` output; every other result
is a reduced ``fractions.Fraction``, which keeps all cross-method equality
checks tolerance-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

#: Nearest double to 1/e; reference point for the convergence diagnostic.
E_INVERSE = math.exp(-1.0)

#: Slack added to float-space comparisons against 1/e. Absorbs the rounding
#: of both the probability and the reference constant to doubles.
FLOAT_SLACK = Fraction(1, 2**48)

#: Valid ``WinTable.method`` tags, one per solver path.
METHODS = ("recursive", "telescoping", "closed_form", "gf")

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WinTable:
    """Random-player win probabilities R_0..R_{n_max} from one solver path.

    Attributes:
        n_max: Largest pile size in the table.
        r: R_n indexed directly by n, each a reduced Fraction in [0, 1].
        method: Which solver produced the table (one of ``METHODS``).
    """

    n_max: int
    r: tuple[Fraction, ...]
    method: str

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if len(self.r) != self.n_max + 1:
            raise ValueError(
                f"expected {self.n_max + 1} entries, got {len(self.r)}"
            )
        for n, value in enumerate(self.r):
            if not 0 <= value <= 1:
                raise ValueError(f"R_{n} = {value} is outside [0, 1]")
        if self.r[0] != 0:
            raise ValueError(f"R_0 must be 0, got {self.r[0]}")
        if self.n_max >= 1 and self.r[1] != 1:
            raise ValueError(f"R_1 must be 1, got {self.r[1]}")
        if self.n_max >= 2 and self.r[2] != _HALF:
            raise ValueError(f"R_2 must be 1/2, got {self.r[2]}")

    def d(self, n: int) -> Fraction:
        """Deterministic player's win probability D_n = 1 - R_n."""
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range 0..{self.n_max}")
        return 1 - self.r[n]


@dataclass(frozen=True)
class DerangementTable:
    """Derangement counts d_n and factorials n! for n = 0..n_max."""

    n_max: int
    d: tuple[int, ...]
    factorial: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        if len(self.d) != self.n_max + 1 or len(self.factorial) != self.n_max + 1:
            raise ValueError("table lengths must be n_max + 1")
        if self.d[0] != 1:
            raise ValueError("d_0 must be 1 (the empty permutation)")
        if self.n_max >= 1 and self.d[1] != 0:
            raise ValueError("d_1 must be 0")
        if any(x < 0 for x in self.d) or any(x < 1 for x in self.factorial):
            raise ValueError("counts must be nonnegative, factorials positive")


@dataclass(frozen=True)
class LimitGap:
    """Distance between D_n and 1/e, with its alternating-series bound.

    ``gap`` is measured in double precision between the nearest-double
    ``d_n_float`` and ``E_INVERSE``; ``bound`` is the exact 1/(n+1)!.
    The contract is gap <= bound + FLOAT_SLACK.
    """

    d_n_float: float
    gap: float
    bound: Fraction


def solve_recursive(n_max: int) -> WinTable:
    """R_n via the two-term recurrence n*R_n = R_{n-2} + (n-1)*R_{n-1}.

    Seeds R_0 = 0, R_1 = 1 and applies the recurrence from n = 2 up (it
    already holds at n = 2, where it gives the expected 1/2).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    r = [_ZERO]
    if n_max >= 1:
        r.append(_ONE)
    for n in range(2, n_max + 1):
        r.append((r[n - 2] + (n - 1) * r[n - 1]) / n)
    return WinTable(n_max=n_max, r=tuple(r), method="recursive")


def solve_telescoping(n_max: int) -> WinTable:
    """R_n as the partial sum of its consecutive differences.

    The difference a_n = R_n - R_{n-1} satisfies a_n = -a_{n-1}/n with
    a_1 = 1, so a_n = (-1)^(n+1)/n! and R_n = a_1 + ... + a_n from R_0 = 0.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    r = [_ZERO]
    fact = 1
    for n in range(1, n_max + 1):
        fact *= n
        a_n = Fraction((-1) ** (n + 1), fact)
        r.append(r[n - 1] + a_n)
    return WinTable(n_max=n_max, r=tuple(r), method="telescoping")


def closed_form(n: int) -> Fraction:
    """Exact R_n = 1 - sum_{k=0}^{n} (-1)^k / k!."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = _ZERO
    fact = 1
    for k in range(n + 1):
        if k > 0:
            fact *= k
        total += Fraction((-1) ** k, fact)
    return 1 - total


def closed_form_table(n_max: int) -> WinTable:
    """WinTable built from independent ``closed_form`` evaluations."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    r = tuple(closed_form(n) for n in range(n_max + 1))
    return WinTable(n_max=n_max, r=r, method="closed_form")


def derangements(n_max: int) -> DerangementTable:
    """Derangement counts via d_n = (n-1) * (d_{n-1} + d_{n-2}).

    Big-integer throughout; the companion factorials allow forming the
    exact probability d_n/n! without recomputation.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    d = [1]
    fact = [1]
    if n_max >= 1:
        d.append(0)
        fact.append(1)
    for n in range(2, n_max + 1):
        d.append((n - 1) * (d[n - 1] + d[n - 2]))
        fact.append(fact[n - 1] * n)
    return DerangementTable(n_max=n_max, d=tuple(d), factorial=tuple(fact))


def derangement_prob(n: int, table: DerangementTable) -> Fraction:
    """Probability d_n/n! that a uniform n-permutation has no fixed point.

    Equals D_n exactly; raises IndexError when n is outside the table.
    """
    if not 0 <= n <= table.n_max:
        raise IndexError(f"n={n} outside table range 0..{table.n_max}")
    return Fraction(table.d[n], table.factorial[n])


def gf_coefficients(n_max: int) -> tuple[Fraction, ...]:
    """Coefficients 0..n_max of (sum_i x^i) * (1 - sum_j (-x)^j / j!).

    Both factor series are truncated at degree n_max and multiplied as
    formal power series; coefficient k of the product equals R_k. The
    convolution is evaluated literally, term by term -- by design this is
    an independent computation path, not a wrapper over ``closed_form``.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    geometric = [_ONE] * (n_max + 1)
    exp_part = [_ZERO] * (n_max + 1)  # coefficients of 1 - sum (-x)^j / j!
    fact = 1
    for j in range(1, n_max + 1):
        fact *= j
        exp_part[j] = Fraction((-1) ** (j + 1), fact)
    coeffs = []
    for k in range(n_max + 1):
        c_k = _ZERO
        for j in range(k + 1):
            c_k += geometric[k - j] * exp_part[j]
        coeffs.append(c_k)
    return tuple(coeffs)


def gf_table(n_max: int) -> WinTable:
    """WinTable wrapping ``gf_coefficients``."""
    return WinTable(n_max=n_max, r=gf_coefficients(n_max), method="gf")


def solve(n_max: int, method: str) -> WinTable:
    """Dispatch to one of the four solver paths by method tag."""
    if method == "recursive":
        return solve_recursive(n_max)
    if method == "telescoping":
        return solve_telescoping(n_max)
    if method == "closed_form":
        return closed_form_table(n_max)
    if method == "gf":
        return gf_table(n_max)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def gap_to_limit(n: int, table: WinTable) -> LimitGap:
    """Measure how far D_n sits from 1/e.

    Returns the nearest-double value of D_n, the double-precision distance
    to ``E_INVERSE``, and the exact alternating-series bound 1/(n+1)!.
    """
    d_float = float(table.d(n))
    return LimitGap(
        d_n_float=d_float,
        gap=abs(d_float - E_INVERSE),
        bound=Fraction(1, math.factorial(n + 1)),
    )
