"""Command-line surface: generate, analyze, verify.

Exit codes: 0 on success, 1 on a mathematical violation (a "neither"
classification or a failed verification check), 2 on usage or input errors.
Reports go to stdout, diagnostics to stderr, and every number printed is
exact (integers or "p/q" rationals, never decimals).
"""

from __future__ import annotations

import sys

import click

from figurate.core import generate_first_order, quotient_direct
from figurate.logbehavior import (
    LogBehavior,
    classify_log_behavior,
    quotient_monotonicity,
)
from figurate.seqio import emit_bfile, emit_csv, parse_sequence_file
from figurate.verify import CHECK_NAMES, SweepReport, VerifySweepConfig, run_verify_sweep

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

_CLASSIFICATION_WORDS = {
    LogBehavior.LOG_CONCAVE: "log-concave",
    LogBehavior.LOG_CONVEX: "log-convex",
    LogBehavior.GEOMETRIC: "geometric (both)",
    LogBehavior.NEITHER: "neither",
    LogBehavior.INDETERMINATE: "indeterminate",
}


@click.group()
def cli():
    """Exact m-gonal figurate numbers and log-concavity verification."""


@cli.command()
@click.option("--m", "m", required=True, type=click.IntRange(min=3), help="Polygon order (>= 3).")
@click.option("--count", required=True, type=click.IntRange(min=1), help="How many terms.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "bfile", "csv"]),
    default="plain",
    show_default=True,
    help="Output format.",
)
def gen(m: int, count: int, fmt: str):
    """Print the first COUNT m-gonal figurate numbers."""
    terms = generate_first_order(m, count)
    if fmt == "plain":
        click.echo(" ".join(str(term) for term in terms))
    elif fmt == "bfile":
        click.echo(emit_bfile(1, terms), nl=False)
    else:
        click.echo(emit_csv({"n": list(range(1, count + 1)), "S": terms}), nl=False)


@cli.command()
@click.option("--m", "m", required=True, type=click.IntRange(min=3), help="Polygon order (>= 3).")
@click.option("--count", required=True, type=click.IntRange(min=1), help="How many quotients.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "bfile", "csv"]),
    default="plain",
    show_default=True,
    help="Output format.",
)
def quotients(m: int, count: int, fmt: str):
    """Print the exact quotients x(n) = S(n+1)/S(n) for n = 1..COUNT."""
    if fmt == "bfile":
        raise click.UsageError("b-file records hold integers; quotients are rationals")
    values = quotient_direct(m, count)
    if fmt == "plain":
        click.echo(" ".join(str(value) for value in values))
    else:
        click.echo(emit_csv({"n": list(range(1, count + 1)), "x": values}), nl=False)


@cli.command()
@click.option(
    "--input",
    "source",
    type=click.File("r"),
    default="-",
    help="Sequence file (whitespace-separated integers or p/q rationals); defaults to stdin.",
)
def analyze(source):
    """Classify a positive sequence as log-concave, log-convex, geometric, or neither."""
    try:
        sequence = parse_sequence_file(source.read())
    except ValueError as error:
        click.echo(f"error: {error}", err=True)
        sys.exit(EXIT_USAGE)

    behavior = classify_log_behavior(sequence)
    direction = quotient_monotonicity(sequence)

    click.echo(f"classification: {_CLASSIFICATION_WORDS[behavior.classification]}")
    if behavior.first_concavity_violation is not None:
        click.echo(f"first concavity violation: j={behavior.first_concavity_violation}")
    if behavior.first_convexity_violation is not None:
        click.echo(f"first convexity violation: j={behavior.first_convexity_violation}")
    click.echo(f"quotient direction: {direction.direction.value}")
    if direction.first_violation is not None:
        click.echo(f"first monotonicity break: step {direction.first_violation}")

    if behavior.classification is LogBehavior.NEITHER:
        sys.exit(EXIT_VIOLATION)


@cli.command()
@click.option("--m-from", default=3, type=click.IntRange(min=3), show_default=True, help="Lowest polygon order.")
@click.option("--m-to", default=50, type=click.IntRange(min=3), show_default=True, help="Highest polygon order.")
@click.option("--n-max", default=2000, type=click.IntRange(min=3), show_default=True, help="Highest term index.")
@click.option(
    "--checks",
    default=None,
    metavar="LIST",
    help=f"Comma-separated subset of: {', '.join(CHECK_NAMES)}. Default: all.",
)
@click.option("--delta-offset", default=2, type=click.IntRange(1, 2), show_default=True, help="Quotient lag in the Doslic difference condition.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "csv"]),
    default="plain",
    show_default=True,
    help="Summary format.",
)
@click.option("--inject-corruption", default=None, hidden=True, metavar="M,N")
def verify(m_from, m_to, n_max, checks, delta_offset, fmt, inject_corruption):
    """Run the exact verification sweep and report a per-check summary.

    Exits 0 when every selected check passes, 1 with the first
    counterexample otherwise.
    """
    selected = CHECK_NAMES if checks is None else tuple(
        name.strip() for name in checks.split(",") if name.strip()
    )
    corrupt_at = None
    if inject_corruption is not None:
        try:
            m_text, n_text = inject_corruption.split(",")
            corrupt_at = (int(m_text), int(n_text))
        except ValueError:
            raise click.UsageError("--inject-corruption expects 'M,N'") from None
    try:
        config = VerifySweepConfig(
            m_from=m_from,
            m_to=m_to,
            n_max=n_max,
            checks=selected,
            delta_offset=delta_offset,
        )
    except ValueError as error:
        raise click.UsageError(str(error)) from None

    report = run_verify_sweep(config, corrupt_at=corrupt_at)
    _print_sweep_report(report, fmt)
    if not report.passed:
        sys.exit(EXIT_VIOLATION)


def _print_sweep_report(report: SweepReport, fmt: str) -> None:
    config = report.config
    m_range = f"{config.m_from}..{config.m_to}"
    rows = [
        (summary.check, m_range, str(config.n_max), "pass" if summary.passed else "FAIL")
        for summary in report.summaries
    ]
    if fmt == "csv":
        click.echo("check,m_from,m_to,n_max,result,detail")
        for summary in report.summaries:
            result = "pass" if summary.passed else "FAIL"
            detail = ""
            if summary.counterexample is not None:
                c = summary.counterexample
                detail = f"m={c.m} n={c.n} {c.witness}"
            click.echo(
                f"{summary.check},{config.m_from},{config.m_to},{config.n_max},{result},{detail}"
            )
    else:
        header = ("check", "m-range", "n-max", "result")
        widths = [
            max(len(row[column]) for row in [header, *rows])
            for column in range(len(header))
        ]
        for row in [header, *rows]:
            click.echo("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    for summary in report.summaries:
        for note in summary.notes:
            click.echo(f"note: {note}")
    counterexample = report.first_counterexample
    if counterexample is None:
        if fmt == "plain":
            click.echo("all checks passed")
    else:
        click.echo(
            f"counterexample: check={counterexample.check} m={counterexample.m} "
            f"n={counterexample.n} {counterexample.witness}"
        )


def main():
    """Console entry point."""
    cli()


if __name__ == "__main__":
    main()
