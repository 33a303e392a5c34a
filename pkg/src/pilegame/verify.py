"""Named cross-checks tying every computation path to the others.

Each check carries a stable identifier and, on failure, names the first
offending index, so the CLI ``verify`` command (and the acceptance suite
behind it) can pinpoint a disagreement:

* ``base-cases``             -- R_0 = 0, R_1 = 1, R_2 = 1/2
* ``<a>-vs-<b>``             -- the four solver paths, pairwise, exact equality
* ``derangement-identity``   -- 1 - R_n = d_n / n! for every n
* ``telescoping-differences``-- R_n - R_{n-1} = (-1)^(n+1)/n!
* ``oracle-win-prob``        -- game-tree D_n equals the solvers' D_n
* ``oracle-win-prob-no-memo``-- same, with the pure cache-free tree walk
* ``oracle-steps``           -- game-tree E(Z_n) equals the recursion's
* ``q-recursion``            -- n*E(Q_n) = 1 - E(Q_{n-1}) with E(Q_2) = 0
* ``steps-vs-q-recursion``   -- summed-recursion differences match q_sequence
* ``alternating-bound``      -- |D_n - D_m| <= 1/(n+1)! for all n < m
* ``limit-gap``              -- float distance to 1/e within bound + slack

All equality checks run on exact rationals; only ``limit-gap`` touches
floats, and it compares them exactly after lifting back to rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    FLOAT_SLACK,
    WinTable,
    DerangementTable,
    closed_form_table,
    derangements,
    gap_to_limit,
    gf_table,
    solve_recursive,
    solve_telescoping,
)
from .oracle import MEMOIZED_MAX_N, UNMEMOIZED_MAX_N, oracle_expected_steps, oracle_win_prob
from .steps import StepsTable, expected_steps, q_sequence

#: limit-gap is checked for n up to this value (beyond it the exact bound
#: drops far below double resolution and the slack term dominates anyway).
LIMIT_GAP_MAX_N = 20


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; ``detail`` is empty when it passed."""

    check_id: str
    passed: bool
    detail: str = ""

    def __str__(self) -> str:
        if self.passed:
            return f"PASS {self.check_id}"
        return f"FAIL {self.check_id}: {self.detail}"


def _ok(check_id: str) -> CheckResult:
    return CheckResult(check_id=check_id, passed=True)


def _fail(check_id: str, detail: str) -> CheckResult:
    return CheckResult(check_id=check_id, passed=False, detail=detail)


def check_base_cases(table: WinTable) -> CheckResult:
    expected = {0: Fraction(0), 1: Fraction(1), 2: Fraction(1, 2)}
    for n, value in expected.items():
        if n <= table.n_max and table.r[n] != value:
            return _fail("base-cases", f"R_{n} = {table.r[n]}, expected {value} (n={n})")
    return _ok("base-cases")


def check_tables_equal(check_id: str, a: WinTable, b: WinTable) -> CheckResult:
    """Exact elementwise equality of two solver tables."""
    if a.n_max != b.n_max:
        return _fail(check_id, f"table sizes differ: {a.n_max} vs {b.n_max}")
    for n in range(a.n_max + 1):
        if a.r[n] != b.r[n]:
            return _fail(
                check_id,
                f"{a.method} gives {a.r[n]} but {b.method} gives {b.r[n]} at n={n}",
            )
    return _ok(check_id)


def check_derangement_identity(table: WinTable, dtable: DerangementTable) -> CheckResult:
    """1 - R_n must equal d_n/n! exactly for every n in the table."""
    top = min(table.n_max, dtable.n_max)
    for n in range(top + 1):
        expected = Fraction(dtable.d[n], dtable.factorial[n])
        if table.d(n) != expected:
            return _fail(
                "derangement-identity",
                f"1 - R_{n} = {table.d(n)} but d_{n}/{n}! = {expected} (n={n})",
            )
    return _ok("derangement-identity")


def check_telescoping_differences(table: WinTable) -> CheckResult:
    """R_n - R_{n-1} = (-1)^(n+1)/n! exactly, for n >= 1."""
    fact = 1
    for n in range(1, table.n_max + 1):
        fact *= n
        expected = Fraction((-1) ** (n + 1), fact)
        if table.r[n] - table.r[n - 1] != expected:
            return _fail(
                "telescoping-differences",
                f"R_{n} - R_{n - 1} = {table.r[n] - table.r[n - 1]}, "
                f"expected {expected} (n={n})",
            )
    return _ok("telescoping-differences")


def check_oracle_win_prob(table: WinTable, oracle_max: int, memoize: bool) -> CheckResult:
    check_id = "oracle-win-prob" if memoize else "oracle-win-prob-no-memo"
    for n in range(min(oracle_max, table.n_max) + 1):
        tree_value = oracle_win_prob(n, memoize=memoize)
        if tree_value != table.d(n):
            return _fail(
                check_id,
                f"game tree gives D_{n} = {tree_value}, solver gives {table.d(n)} (n={n})",
            )
    return _ok(check_id)


def check_oracle_steps(steps: StepsTable, oracle_max: int) -> CheckResult:
    for n in range(1, min(oracle_max, steps.n_max) + 1):
        tree_value = oracle_expected_steps(n)
        if tree_value != steps.ez_at(n):
            return _fail(
                "oracle-steps",
                f"game tree gives E(Z_{n}) = {tree_value}, "
                f"recursion gives {steps.ez_at(n)} (n={n})",
            )
    return _ok("oracle-steps")


def check_q_recursion(qseq: tuple[Fraction, ...]) -> CheckResult:
    """The first-order identity on the sequence produced by q_sequence."""
    if qseq[0] != 0:
        return _fail("q-recursion", f"E(Q_2) = {qseq[0]}, expected 0 (n=2)")
    for i in range(1, len(qseq)):
        n = i + 2
        if n * qseq[i] != 1 - qseq[i - 1]:
            return _fail(
                "q-recursion",
                f"{n}*E(Q_{n}) = {n * qseq[i]} but 1 - E(Q_{n - 1}) = "
                f"{1 - qseq[i - 1]} (n={n})",
            )
    return _ok("q-recursion")


def check_steps_vs_q(steps: StepsTable, qseq: tuple[Fraction, ...]) -> CheckResult:
    """Differences of the summed recursion must match the q_sequence values."""
    for i, value in enumerate(qseq):
        n = i + 2
        if n > steps.n_max:
            break
        if steps.eq_at(n) != value:
            return _fail(
                "steps-vs-q-recursion",
                f"difference table gives E(Q_{n}) = {steps.eq_at(n)}, "
                f"first-order recursion gives {value} (n={n})",
            )
    return _ok("steps-vs-q-recursion")


def check_alternating_bound(table: WinTable) -> CheckResult:
    """|D_n - D_m| <= 1/(n+1)! for every pair n < m, in exact arithmetic."""
    bounds = []
    fact = 1
    for j in range(1, table.n_max + 2):
        fact *= j
        bounds.append(Fraction(1, fact))  # bounds[n] = 1/(n+1)!
    d = [table.d(n) for n in range(table.n_max + 1)]
    for n in range(table.n_max + 1):
        bound_n = bounds[n]
        for m in range(n + 1, table.n_max + 1):
            if abs(d[n] - d[m]) > bound_n:
                return _fail(
                    "alternating-bound",
                    f"|D_{n} - D_{m}| = {abs(d[n] - d[m])} exceeds "
                    f"1/{n + 1}! = {bound_n} (n={n}, m={m})",
                )
    return _ok("alternating-bound")


def check_limit_gap(table: WinTable, max_n: int = LIMIT_GAP_MAX_N) -> CheckResult:
    """Float gap to 1/e stays within the exact bound plus the float slack."""
    for n in range(min(max_n, table.n_max) + 1):
        report = gap_to_limit(n, table)
        if Fraction(report.gap) > report.bound + FLOAT_SLACK:
            return _fail(
                "limit-gap",
                f"gap {report.gap} exceeds 1/{n + 1}! + 2^-48 (n={n})",
            )
    return _ok("limit-gap")


def run_checks(n_max: int = 200, oracle_max: int = 12) -> list[CheckResult]:
    """Run every named check and return the results in a fixed order.

    Args:
        n_max: Upper pile size for the analytic tables (at least 2).
        oracle_max: Upper pile size for game-tree comparisons; capped at
            ``MEMOIZED_MAX_N`` (and at ``UNMEMOIZED_MAX_N`` for the
            cache-free pass). Must not exceed n_max.

    Returns:
        One CheckResult per named check, all-pass meaning the analytic
        solvers, the combinatorial identity, the game tree, and the
        convergence bounds agree exactly.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if oracle_max < 0 or oracle_max > MEMOIZED_MAX_N:
        raise ValueError(f"oracle_max must be in 0..{MEMOIZED_MAX_N}, got {oracle_max}")
    if oracle_max > n_max:
        raise ValueError(f"oracle_max ({oracle_max}) must not exceed n_max ({n_max})")

    recursive = solve_recursive(n_max)
    telescoping = solve_telescoping(n_max)
    closed = closed_form_table(n_max)
    gf = gf_table(n_max)
    dtable = derangements(n_max)
    steps = expected_steps(n_max)
    qseq = q_sequence(n_max)

    pairs = [
        ("recursive-vs-telescoping", recursive, telescoping),
        ("recursive-vs-closed-form", recursive, closed),
        ("recursive-vs-gf", recursive, gf),
        ("telescoping-vs-closed-form", telescoping, closed),
        ("telescoping-vs-gf", telescoping, gf),
        ("closed-form-vs-gf", closed, gf),
    ]

    results = [check_base_cases(recursive)]
    results.extend(check_tables_equal(check_id, a, b) for check_id, a, b in pairs)
    results.append(check_derangement_identity(recursive, dtable))
    results.append(check_telescoping_differences(recursive))
    results.append(check_oracle_win_prob(recursive, oracle_max, memoize=True))
    results.append(
        check_oracle_win_prob(recursive, min(oracle_max, UNMEMOIZED_MAX_N), memoize=False)
    )
    results.append(check_oracle_steps(steps, oracle_max))
    results.append(check_q_recursion(qseq))
    results.append(check_steps_vs_q(steps, qseq))
    results.append(check_alternating_bound(recursive))
    results.append(check_limit_gap(recursive))
    return results
