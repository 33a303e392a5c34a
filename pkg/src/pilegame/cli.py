"""Command-line surface: solvers, simulator, steps, verification, convergence.

Report contract: stdout carries only the report (CSV with a header row, or
one JSON object with ``rows`` and ``meta``), stderr carries diagnostics.
Rationals are emitted as numerator/denominator integer column pairs so
downstream tools can reproduce the exact checks; float columns are printed
with 17 significant digits and are convenience only. Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import csv
import json
import sys
from fractions import Fraction

import click

from . import __version__
from .exact import closed_form, derangements, gap_to_limit, solve, solve_recursive
from .oracle import MEMOIZED_MAX_N
from .simulate import Z_BY_LEVEL, run_trials
from .steps import expected_steps
from .verify import run_checks

_METHOD_BY_FLAG = {
    "recursive": "recursive",
    "telescoping": "telescoping",
    "closed-form": "closed_form",
    "gf": "gf",
}

_U64_MAX = (1 << 64) - 1


def _fmt_float(value: float) -> str:
    return format(value, ".17g")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):  # bool before int: bool is an int subclass
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt_float(value)
    return str(value)


def _emit(rows: list[dict], fieldnames: list[str], meta: dict, fmt: str) -> None:
    """Write the report to stdout in the requested format."""
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_csv_cell(row[name]) for name in fieldnames])
    else:
        click.echo(json.dumps({"rows": rows, "meta": meta}, indent=2))


def _format_option(f):
    return click.option(
        "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
        help="Report format written to stdout.",
    )(f)


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Exact solvers, a seedable simulator, and cross-verification for the
    random-vs-deterministic pile game."""


@main.command("solve")
@click.option("--n-max", type=click.IntRange(min=0), required=True,
              help="Largest pile size to report.")
@click.option("--method", type=click.Choice(sorted(_METHOD_BY_FLAG)), default="recursive",
              help="Which solver path produces the probabilities.")
@_format_option
def solve_cmd(n_max: int, method: str, fmt: str) -> None:
    """Deterministic player's win probability for every n up to --n-max."""
    table = solve(n_max, _METHOD_BY_FLAG[method])
    dtable = derangements(n_max)
    rows = []
    for n in range(n_max + 1):
        d_exact = table.d(n)
        report = gap_to_limit(n, table)
        rows.append({
            "n": n,
            "d_prob_num": d_exact.numerator,
            "d_prob_den": d_exact.denominator,
            "d_prob_float": report.d_n_float,
            "gap_to_e_inv": report.gap,
            "d_n": dtable.d[n],
            "method": table.method,
        })
    fieldnames = ["n", "d_prob_num", "d_prob_den", "d_prob_float",
                  "gap_to_e_inv", "d_n", "method"]
    meta = {"seed": None, "method": table.method, "version": __version__}
    _emit(rows, fieldnames, meta, fmt)


@main.command()
@click.option("--n", type=click.IntRange(min=1), required=True,
              help="Initial pile size (>= 1).")
@click.option("--trials", type=click.IntRange(min=1), default=100_000,
              help="Number of independent games.")
@click.option("--seed", type=click.IntRange(min=0, max=_U64_MAX), default=0,
              help="Unsigned 64-bit master seed.")
@click.option("--workers", type=click.IntRange(min=1), default=1,
              help="Number of contiguous trial blocks / generator streams.")
@click.option("--ci-level", type=float, default=0.99,
              help="Wilson interval level (0.90, 0.95, 0.99 or 0.999).")
@_format_option
def simulate(n: int, trials: int, seed: int, workers: int, ci_level: float, fmt: str) -> None:
    """Monte Carlo estimate of the deterministic player's win probability."""
    if ci_level not in Z_BY_LEVEL:
        raise click.UsageError(
            f"--ci-level must be one of {sorted(Z_BY_LEVEL)}, got {ci_level}"
        )
    result = run_trials(n, trials, seed=seed, workers=workers, ci_level=ci_level)
    d_exact = 1 - closed_form(n)
    within_ci = Fraction(result.ci_low) <= d_exact <= Fraction(result.ci_high)
    rows = [{
        "n": result.n,
        "trials": result.trials,
        "d_wins": result.d_wins,
        "p_hat": result.p_hat,
        "ci_low": result.ci_low,
        "ci_high": result.ci_high,
        "ci_level": result.ci_level,
        "mean_r_steps": result.mean_r_steps,
        "seed": result.seed,
        "workers": result.workers,
        "d_exact_num": d_exact.numerator,
        "d_exact_den": d_exact.denominator,
        "within_ci": within_ci,
    }]
    fieldnames = ["n", "trials", "d_wins", "p_hat", "ci_low", "ci_high",
                  "ci_level", "mean_r_steps", "seed", "workers",
                  "d_exact_num", "d_exact_den", "within_ci"]
    meta = {"seed": seed, "method": "simulate", "version": __version__}
    _emit(rows, fieldnames, meta, fmt)


@main.command()
@click.option("--n-max", type=click.IntRange(min=1), required=True,
              help="Largest pile size to report.")
@_format_option
def steps(n_max: int, fmt: str) -> None:
    """Expected number of random-player moves E(Z_n) and differences E(Q_n)."""
    table = expected_steps(n_max)
    rows = []
    for n in range(1, n_max + 1):
        ez = table.ez_at(n)
        eq = table.eq_at(n) if n >= 2 else None
        rows.append({
            "n": n,
            "ez_num": ez.numerator,
            "ez_den": ez.denominator,
            "eq_num": eq.numerator if eq is not None else None,
            "eq_den": eq.denominator if eq is not None else None,
            "ez_float": float(ez),
        })
    fieldnames = ["n", "ez_num", "ez_den", "eq_num", "eq_den", "ez_float"]
    meta = {"seed": None, "method": "steps", "version": __version__}
    _emit(rows, fieldnames, meta, fmt)


@main.command()
@click.option("--n-max", type=click.IntRange(min=2), default=200,
              help="Upper pile size for the analytic cross-checks.")
@click.option("--oracle-max", type=click.IntRange(min=0, max=MEMOIZED_MAX_N), default=12,
              help=f"Upper pile size for game-tree comparisons (<= {MEMOIZED_MAX_N}).")
def verify(n_max: int, oracle_max: int) -> None:
    """Run every named cross-check; exit 0 only if all of them pass."""
    if oracle_max > n_max:
        raise click.UsageError(
            f"--oracle-max ({oracle_max}) must not exceed --n-max ({n_max})"
        )
    results = run_checks(n_max=n_max, oracle_max=oracle_max)
    for result in results:
        click.echo(str(result))
    failures = sum(1 for result in results if not result.passed)
    click.echo(f"{len(results) - failures}/{len(results)} checks passed")
    if failures:
        sys.exit(1)


@main.command()
@click.option("--n-max", type=click.IntRange(min=0), required=True,
              help="Largest pile size to report.")
@_format_option
def convergence(n_max: int, fmt: str) -> None:
    """Distance between D_n and 1/e with the factorial decay bound."""
    table = solve_recursive(n_max)
    rows = []
    for n in range(n_max + 1):
        report = gap_to_limit(n, table)
        rows.append({
            "n": n,
            "d_prob_float": report.d_n_float,
            "gap_to_e_inv": report.gap,
            "bound": float(report.bound),
        })
    fieldnames = ["n", "d_prob_float", "gap_to_e_inv", "bound"]
    meta = {"seed": None, "method": "convergence", "version": __version__}
    _emit(rows, fieldnames, meta, fmt)


if __name__ == "__main__":
    main()
