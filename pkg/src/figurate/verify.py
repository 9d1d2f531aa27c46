"""Exact verification sweeps over ranges of polygon orders.

Each check sweeps every m in the configured range and fails on the first
exact counterexample, reported as (check, m, n, witness). The checks:

* cross-formula: all five generation routes agree term-by-term;
* bounds: 1 < x(n) <= m with x(1) = m, plus the closed-form seed values
  x(2) = 3 - 3/m and x(3) = 2 - 2/(3(m - 1));
* monotonicity: quotients never increase (equalities are noted, not
  assumed away) and the direct and recurrence quotient routes agree;
* margins: every log-concavity margin is >= 0 (zero margins are noted);
* doslic: the Doslic criterion conditions hold on [3, n_max].

Sweeps are pure and deterministic; m values are processed in ascending
order, checks in the canonical order above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from figurate.core import (
    closed_form,
    closed_form_alt,
    generate_first_order,
    generate_second_order,
    progression_sums,
    quotient_direct,
    quotient_recurrence,
)
from figurate.logbehavior import check_doslic_criterion, check_quotient_bounds, margin_sequence

__all__ = [
    "CHECK_NAMES",
    "VerifySweepConfig",
    "Counterexample",
    "CheckSummary",
    "SweepReport",
    "run_verify_sweep",
]

CHECK_NAMES = ("cross-formula", "bounds", "monotonicity", "margins", "doslic")


@dataclass(frozen=True)
class VerifySweepConfig:
    """Sweep parameters; defaults cover m in [3, 50] up to n = 2000."""

    m_from: int = 3
    m_to: int = 50
    n_max: int = 2000
    checks: tuple[str, ...] = CHECK_NAMES
    delta_offset: int = 2

    def __post_init__(self):
        if self.m_from < 3:
            raise ValueError(f"m_from must be >= 3, got {self.m_from}")
        if self.m_to < self.m_from:
            raise ValueError(f"m_to must be >= m_from, got {self.m_to} < {self.m_from}")
        if self.n_max < 3:
            raise ValueError(f"n_max must be >= 3, got {self.n_max}")
        if self.delta_offset not in (1, 2):
            raise ValueError(f"delta_offset must be 1 or 2, got {self.delta_offset}")
        unknown = [name for name in self.checks if name not in CHECK_NAMES]
        if unknown:
            raise ValueError(
                f"unknown checks {unknown}; valid names: {', '.join(CHECK_NAMES)}"
            )
        if not self.checks:
            raise ValueError("at least one check must be selected")
        # normalize to canonical order, dropping duplicates
        ordered = tuple(name for name in CHECK_NAMES if name in self.checks)
        object.__setattr__(self, "checks", ordered)


@dataclass(frozen=True)
class Counterexample:
    check: str
    m: int
    n: int
    witness: str


@dataclass(frozen=True)
class CheckSummary:
    check: str
    passed: bool
    counterexample: Counterexample | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepReport:
    config: VerifySweepConfig
    summaries: tuple[CheckSummary, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(summary.passed for summary in self.summaries)

    @property
    def first_counterexample(self) -> Counterexample | None:
        for summary in self.summaries:
            if summary.counterexample is not None:
                return summary.counterexample
        return None

    def summary_for(self, check: str) -> CheckSummary:
        for summary in self.summaries:
            if summary.check == check:
                return summary
        raise KeyError(f"no summary for check {check!r}")


def _check_cross_formula(m, config, corrupt_at):
    n_max = config.n_max
    routes = (
        ("closed-form", [closed_form(m, n) for n in range(1, n_max + 1)]),
        ("alt-form", [closed_form_alt(m, n) for n in range(1, n_max + 1)]),
        ("first-order", generate_first_order(m, n_max)),
        ("second-order", generate_second_order(m, n_max)),
        ("progression-sum", progression_sums(m, n_max)),
    )
    if corrupt_at is not None and corrupt_at[0] == m and 1 <= corrupt_at[1] <= n_max:
        routes[2][1][corrupt_at[1] - 1] += 1
    anchor_name, anchor = routes[0]
    for name, values in routes[1:]:
        for n in range(1, n_max + 1):
            if values[n - 1] != anchor[n - 1]:
                witness = f"{anchor_name}={anchor[n - 1]} {name}={values[n - 1]}"
                return Counterexample("cross-formula", m, n, witness), []
    return None, []


def _check_bounds(m, config, corrupt_at):
    quotients = quotient_direct(m, config.n_max)
    report = check_quotient_bounds(m, quotients)
    violations = []
    if not report.lower.ok:
        n = report.lower.first_failure
        violations.append((n, f"x({n})={quotients[n - 1]} is not > 1"))
    if not report.upper.ok:
        n = report.upper.first_failure
        violations.append((n, f"x({n})={quotients[n - 1]} exceeds m={m}"))
    seeds = (
        (1, Fraction(m)),
        (2, 3 - Fraction(3, m)),
        (3, 2 - Fraction(2, 3 * (m - 1))),
    )
    for n, expected in seeds:
        if n <= config.n_max and quotients[n - 1] != expected:
            violations.append((n, f"x({n})={quotients[n - 1]} expected {expected}"))
    if violations:
        n, witness = min(violations)
        return Counterexample("bounds", m, n, witness), []
    return None, []


def _check_monotonicity(m, config, corrupt_at):
    direct = quotient_direct(m, config.n_max)
    recurred = quotient_recurrence(m, config.n_max)
    notes = []
    for n in range(1, config.n_max + 1):
        if direct[n - 1] != recurred[n - 1]:
            witness = f"direct={direct[n - 1]} recurrence={recurred[n - 1]}"
            return Counterexample("monotonicity", m, n, witness), notes
    for n in range(1, config.n_max):
        if direct[n] > direct[n - 1]:
            witness = f"x({n})={direct[n - 1]} < x({n + 1})={direct[n]}"
            return Counterexample("monotonicity", m, n + 1, witness), notes
        if direct[n] == direct[n - 1]:
            notes.append(f"equality x({n}) = x({n + 1}) = {direct[n]} at m={m}")
    return None, notes


def _check_margins(m, config, corrupt_at):
    notes = []
    for position, margin in enumerate(margin_sequence(m, config.n_max)):
        j = position + 2
        if margin < 0:
            return Counterexample("margins", m, j, f"margin={margin}"), notes
        if margin == 0:
            notes.append(f"zero margin at m={m} j={j}")
    return None, notes


def _check_doslic(m, config, corrupt_at):
    report = check_doslic_criterion(m, 3, config.n_max, config.delta_offset)
    if report.verdict:
        return None, []
    if not report.r_nonneg.ok:
        n, witness = report.r_nonneg.first_failure, "R(n) < 0"
    elif not report.t_nonpos.ok:
        n, witness = report.t_nonpos.first_failure, "T(n) > 0"
    elif not report.seed_step_ok.ok:
        n, witness = report.seed_step_ok.first_failure, "quotient increases at the window start"
    else:
        n = report.delta_condition.first_failure
        witness = f"dR(n)x(n-{report.delta_offset}) + dT(n) > 0"
    return Counterexample("doslic", m, n, witness), []


_CHECK_FUNCTIONS = {
    "cross-formula": _check_cross_formula,
    "bounds": _check_bounds,
    "monotonicity": _check_monotonicity,
    "margins": _check_margins,
    "doslic": _check_doslic,
}


def run_verify_sweep(
    config: VerifySweepConfig | None = None,
    *,
    corrupt_at: tuple[int, int] | None = None,
) -> SweepReport:
    """Run the configured checks over every m in the range.

    Each check stops at its first counterexample. `corrupt_at` = (m, n)
    perturbs the first-order route at that term; it exists purely as a fault
    injection seam for exercising the failure path.
    """
    if config is None:
        config = VerifySweepConfig()
    summaries = []
    for check in config.checks:
        function = _CHECK_FUNCTIONS[check]
        counterexample = None
        notes: list[str] = []
        for m in range(config.m_from, config.m_to + 1):
            counterexample, m_notes = function(m, config, corrupt_at)
            notes.extend(m_notes)
            if counterexample is not None:
                break
        summaries.append(
            CheckSummary(check, counterexample is None, counterexample, tuple(notes))
        )
    return SweepReport(config, tuple(summaries))
