"""Log-behavior classification of positive sequences, with exact arithmetic.

A positive sequence s(1), s(2), ... is log-concave when every interior margin
s(j)^2 - s(j-1) * s(j+1) is >= 0, log-convex when every margin is <= 0, and
geometric when every margin is exactly zero (both at once). Equivalently, the
sequence is log-concave (log-convex) exactly when its quotient sequence
s(n+1)/s(n) is non-increasing (non-decreasing).

This module classifies finite sequences by the margin definition, measures
quotient monotonicity independently, and checks two finite-window conditions
for the m-gonal figurate families: the quotient bounds 1 < x(n) <= m, and the
Doslic sufficient criterion for log-concavity of sequences defined by a
two-term recurrence with variable coefficients.

All verdicts are exact and window-scoped: a passing window means "no
counterexample found on this window", never a claim about all n.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from figurate.core import (
    _check_index,
    _check_polygon_order,
    closed_form,
    coefficient_r,
    coefficient_t,
    quotient_direct,
)

__all__ = [
    "LogBehavior",
    "Monotonicity",
    "PositiveSequence",
    "ConditionFlag",
    "LogBehaviorReport",
    "MonotonicityReport",
    "BoundsReport",
    "CriterionReport",
    "classify_log_behavior",
    "quotient_monotonicity",
    "check_quotient_bounds",
    "check_doslic_criterion",
    "margin_sequence",
]


class LogBehavior(Enum):
    """Classification of a finite positive sequence by its margin signs."""

    LOG_CONCAVE = "log-concave"
    LOG_CONVEX = "log-convex"
    GEOMETRIC = "geometric"
    NEITHER = "neither"
    INDETERMINATE = "indeterminate"


class Monotonicity(Enum):
    """Direction of a quotient sequence."""

    NON_INCREASING = "non-increasing"
    NON_DECREASING = "non-decreasing"
    CONSTANT = "constant"
    NEITHER = "neither"
    INDETERMINATE = "indeterminate"


class PositiveSequence(Sequence):
    """Immutable sequence of strictly positive exact rationals.

    Terms may be given as ints or Fractions; they are stored as Fractions.
    Floats are rejected outright (they are not exact), and any term <= 0 is
    rejected with an error naming its 1-based position.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[int | Fraction]):
        checked = []
        for position, term in enumerate(terms, start=1):
            if isinstance(term, float):
                raise TypeError(
                    f"term {position} is a float; only exact ints or Fractions are accepted"
                )
            if not isinstance(term, (int, Fraction)):
                raise TypeError(
                    f"term {position} has unsupported type {type(term).__name__};"
                    " only exact ints or Fractions are accepted"
                )
            value = Fraction(term)
            if value <= 0:
                raise ValueError(f"term {position} is not positive: {value}")
            checked.append(value)
        if not checked:
            raise ValueError("a positive sequence needs at least one term")
        self._terms = tuple(checked)

    @property
    def terms(self) -> tuple[Fraction, ...]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, index):
        return self._terms[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, PositiveSequence):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        rendered = ", ".join(str(t) for t in self._terms)
        return f"PositiveSequence([{rendered}])"


def _as_sequence(seq: PositiveSequence | Iterable[int | Fraction]) -> PositiveSequence:
    if isinstance(seq, PositiveSequence):
        return seq
    return PositiveSequence(seq)


@dataclass(frozen=True)
class ConditionFlag:
    """Outcome of a per-index condition: ok, or the first failing index."""

    ok: bool
    first_failure: int | None = None


@dataclass(frozen=True)
class LogBehaviorReport:
    """Exact classification of a finite positive sequence.

    Margin indices are 1-based interior positions j in [2, len - 1];
    first_concavity_violation is the smallest j with margin < 0,
    first_convexity_violation the smallest j with margin > 0. The margins
    tuple (margin at j=2 first) is populated only on request and stays
    empty otherwise.
    """

    classification: LogBehavior
    first_concavity_violation: int | None = None
    first_convexity_violation: int | None = None
    margins: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class MonotonicityReport:
    """Direction of the quotient sequence q(n) = s(n+1)/s(n).

    When the direction is NEITHER, first_violation is the smallest step t
    such that q(1)..q(t+1) is already neither non-increasing nor
    non-decreasing (step t compares q(t) with q(t+1)).
    """

    direction: Monotonicity
    first_violation: int | None = None


@dataclass(frozen=True)
class BoundsReport:
    """Window check of the quotient bounds 1 < x(n) <= m."""

    lower: ConditionFlag
    upper: ConditionFlag
    window: tuple[int, int]

    @property
    def lower_ok(self) -> bool:
        return self.lower.ok

    @property
    def upper_ok(self) -> bool:
        return self.upper.ok

    @property
    def in_bounds(self) -> bool:
        return self.lower.ok and self.upper.ok


@dataclass(frozen=True)
class CriterionReport:
    """Window check of the Doslic log-concavity criterion.

    The four conditions: r_nonneg (R(n) >= 0 on the window), t_nonpos
    (T(n) <= 0 on the window), seed_step_ok (the quotient sequence does not
    increase at the window start), and delta_condition
    (dR(n) * x(n - delta_offset) + dT(n) <= 0 on the window, where
    dR(n) = R(n+1) - R(n) and dT(n) = T(n+1) - T(n)).
    """

    window: tuple[int, int]
    r_nonneg: ConditionFlag
    t_nonpos: ConditionFlag
    seed_step_ok: ConditionFlag
    delta_condition: ConditionFlag
    delta_offset: int

    @property
    def verdict(self) -> bool:
        return (
            self.r_nonneg.ok
            and self.t_nonpos.ok
            and self.seed_step_ok.ok
            and self.delta_condition.ok
        )


def classify_log_behavior(
    seq: PositiveSequence | Iterable[int | Fraction],
    *,
    include_margins: bool = False,
) -> LogBehaviorReport:
    """Classify a positive sequence by the signs of its exact margins.

    A sequence shorter than 3 terms is INDETERMINATE (there is no interior
    index to test), not an error.
    """
    terms = _as_sequence(seq).terms
    length = len(terms)
    if length < 3:
        return LogBehaviorReport(
            LogBehavior.INDETERMINATE,
            margins=(),
        )

    margins: list[Fraction] = []
    first_negative: int | None = None
    first_positive: int | None = None
    for j in range(2, length):
        margin = terms[j - 1] * terms[j - 1] - terms[j - 2] * terms[j]
        margins.append(margin)
        if margin < 0 and first_negative is None:
            first_negative = j
        if margin > 0 and first_positive is None:
            first_positive = j

    if first_negative is None and first_positive is None:
        classification = LogBehavior.GEOMETRIC
    elif first_negative is None:
        classification = LogBehavior.LOG_CONCAVE
    elif first_positive is None:
        classification = LogBehavior.LOG_CONVEX
    else:
        classification = LogBehavior.NEITHER

    return LogBehaviorReport(
        classification,
        first_concavity_violation=first_negative,
        first_convexity_violation=first_positive,
        margins=tuple(margins) if include_margins else (),
    )


def quotient_monotonicity(
    seq: PositiveSequence | Iterable[int | Fraction],
) -> MonotonicityReport:
    """Exact monotonicity direction of the quotient sequence s(n+1)/s(n).

    For positive sequences this agrees with :func:`classify_log_behavior`:
    non-increasing quotients match log-concave, non-decreasing match
    log-convex, constant matches geometric.
    """
    terms = _as_sequence(seq).terms
    quotients = [terms[i + 1] / terms[i] for i in range(len(terms) - 1)]
    if len(quotients) < 2:
        return MonotonicityReport(Monotonicity.INDETERMINATE)

    first_increase: int | None = None
    first_decrease: int | None = None
    for step in range(1, len(quotients)):
        if quotients[step] > quotients[step - 1] and first_increase is None:
            first_increase = step
        if quotients[step] < quotients[step - 1] and first_decrease is None:
            first_decrease = step

    if first_increase is None and first_decrease is None:
        return MonotonicityReport(Monotonicity.CONSTANT)
    if first_increase is None:
        return MonotonicityReport(Monotonicity.NON_INCREASING)
    if first_decrease is None:
        return MonotonicityReport(Monotonicity.NON_DECREASING)
    return MonotonicityReport(
        Monotonicity.NEITHER,
        first_violation=max(first_increase, first_decrease),
    )


def check_quotient_bounds(
    m: int, quotients: Sequence[Fraction | int]
) -> BoundsReport:
    """Verify 1 < x(n) <= m for every supplied quotient (1-based positions)."""
    _check_polygon_order(m)
    quotients = list(quotients)
    if not quotients:
        raise ValueError("bounds check needs at least one quotient")
    first_low: int | None = None
    first_high: int | None = None
    for position, x in enumerate(quotients, start=1):
        if x <= 1 and first_low is None:
            first_low = position
        if x > m and first_high is None:
            first_high = position
    return BoundsReport(
        lower=ConditionFlag(first_low is None, first_low),
        upper=ConditionFlag(first_high is None, first_high),
        window=(1, len(quotients)),
    )


def check_doslic_criterion(
    m: int,
    n_start: int,
    n_end: int,
    delta_offset: int = 2,
    *,
    r_of=None,
    t_of=None,
) -> CriterionReport:
    """Check the Doslic log-concavity conditions on the window [n_start, n_end].

    For the m-gonal family with recurrence coefficients R(n), T(n) and
    quotients x(n), this evaluates, with exact arithmetic:

    * R(n) >= 0 and T(n) <= 0 for n in [n_start, n_end];
    * x(n_start) >= x(n_start + 1);
    * dR(n) * x(n - delta_offset) + dT(n) <= 0 for n in [n_start, n_end].

    Both lag conventions for the difference condition appear in the
    literature; delta_offset in {1, 2} selects whether dR(n) multiplies the
    immediately preceding quotient or the one before it.

    The keyword-only r_of / t_of callables (n -> Fraction) replace the real
    coefficient functions; they exist for fault injection in tests.
    """
    _check_polygon_order(m)
    _check_index(n_start, minimum=3, what="window start")
    if n_end < n_start:
        raise ValueError(f"window end must be >= window start, got [{n_start}, {n_end}]")
    if delta_offset not in (1, 2):
        raise ValueError(f"delta_offset must be 1 or 2, got {delta_offset}")
    if r_of is None:
        r_of = lambda n: coefficient_r(m, n)
    if t_of is None:
        t_of = lambda n: coefficient_t(m, n)

    first_r: int | None = None
    first_t: int | None = None
    first_delta: int | None = None
    for n in range(n_start, n_end + 1):
        if r_of(n) < 0 and first_r is None:
            first_r = n
        if t_of(n) > 0 and first_t is None:
            first_t = n
        delta = (r_of(n + 1) - r_of(n)) * _quotient(m, n - delta_offset) + (
            t_of(n + 1) - t_of(n)
        )
        if delta > 0 and first_delta is None:
            first_delta = n

    seeds = quotient_direct(m, n_start + 1)
    seed_ok = seeds[n_start - 1] >= seeds[n_start]

    return CriterionReport(
        window=(n_start, n_end),
        r_nonneg=ConditionFlag(first_r is None, first_r),
        t_nonpos=ConditionFlag(first_t is None, first_t),
        seed_step_ok=ConditionFlag(seed_ok, None if seed_ok else n_start),
        delta_condition=ConditionFlag(first_delta is None, first_delta),
        delta_offset=delta_offset,
    )


def _quotient(m: int, n: int) -> Fraction:
    return Fraction(closed_form(m, n + 1), closed_form(m, n))


def margin_sequence(m: int, count: int) -> list[int]:
    """Margins S(j)^2 - S(j-1) * S(j+1) of the first `count` m-gonal numbers.

    Returns one entry per interior index j = 2..count-1. Log-concavity of the
    family means every entry is >= 0.
    """
    _check_polygon_order(m)
    _check_index(count, minimum=3, what="count")
    terms = [closed_form(m, n) for n in range(1, count + 1)]
    return [
        terms[j - 1] * terms[j - 1] - terms[j - 2] * terms[j] for j in range(2, count)
    ]
