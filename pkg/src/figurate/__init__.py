"""Exact arithmetic for m-gonal figurate numbers and log-behavior analysis.

Generates the m-gonal figurate sequences by several independent routes
(closed forms, first-order and second-order recurrences, term-by-term
progression sums), exposes their exact quotient sequences, classifies the
log-behavior of arbitrary positive sequences, and verifies quotient bounds,
quotient monotonicity, margin nonnegativity, and the Doslic log-concavity
criterion over finite windows. All values are arbitrary-precision integers
or rationals; nothing is ever rounded.
"""

from figurate.core import (
    MIN_POLYGON_ORDER,
    InvariantViolation,
    RecurrenceCoefficients,
    closed_form,
    closed_form_alt,
    coefficient_r,
    coefficient_t,
    generate_first_order,
    generate_second_order,
    gnomon,
    progression_sums,
    quotient_direct,
    quotient_recurrence,
    recurrence_coefficients,
)
from figurate.logbehavior import (
    BoundsReport,
    ConditionFlag,
    CriterionReport,
    LogBehavior,
    LogBehaviorReport,
    Monotonicity,
    MonotonicityReport,
    PositiveSequence,
    check_doslic_criterion,
    check_quotient_bounds,
    classify_log_behavior,
    margin_sequence,
    quotient_monotonicity,
)
from figurate.seqio import (
    REFERENCE_TABLES,
    BFileParseError,
    BFileRecord,
    BFileStructureError,
    ReferenceTable,
    SequenceParseError,
    emit_bfile,
    emit_csv,
    parse_bfile,
    parse_sequence_file,
)
from figurate.verify import (
    CHECK_NAMES,
    CheckSummary,
    Counterexample,
    SweepReport,
    VerifySweepConfig,
    run_verify_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "MIN_POLYGON_ORDER",
    "InvariantViolation",
    "RecurrenceCoefficients",
    "closed_form",
    "closed_form_alt",
    "coefficient_r",
    "coefficient_t",
    "generate_first_order",
    "generate_second_order",
    "gnomon",
    "progression_sums",
    "quotient_direct",
    "quotient_recurrence",
    "recurrence_coefficients",
    "BoundsReport",
    "ConditionFlag",
    "CriterionReport",
    "LogBehavior",
    "LogBehaviorReport",
    "Monotonicity",
    "MonotonicityReport",
    "PositiveSequence",
    "check_doslic_criterion",
    "check_quotient_bounds",
    "classify_log_behavior",
    "margin_sequence",
    "quotient_monotonicity",
    "REFERENCE_TABLES",
    "BFileParseError",
    "BFileRecord",
    "BFileStructureError",
    "ReferenceTable",
    "SequenceParseError",
    "emit_bfile",
    "emit_csv",
    "parse_bfile",
    "parse_sequence_file",
    "CHECK_NAMES",
    "CheckSummary",
    "Counterexample",
    "SweepReport",
    "VerifySweepConfig",
    "run_verify_sweep",
]
