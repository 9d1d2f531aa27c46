"""Generation of m-gonal figurate numbers by independent, cross-checkable formulas.

An m-gonal figurate number counts the points in a triangular (m=3), square
(m=4), pentagonal (m=5), ... arrangement. The n-th term is

    S(m, n) = n * ((m - 2) * n - m + 4) / 2

and equals the sum of the first n elements of the arithmetic progression
1, 1 + (m - 2), 1 + 2(m - 2), ...

Every operation here is a pure function. Conventions:

* m is an integer >= 3 (the polygon order), n is a 1-based term index >= 1;
  a list of terms maps position k to index n = k.
* All arithmetic is exact: terms are Python ints, quotients and recurrence
  coefficients are `fractions.Fraction`. No floating point, ever.

The module deliberately provides several routes to the same values (two
closed forms, a first-order recurrence, a second-order recurrence with
rational coefficients, and a term-by-term progression sum) so that they can
be checked against each other; none of them delegates to another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MIN_POLYGON_ORDER = 3

__all__ = [
    "MIN_POLYGON_ORDER",
    "InvariantViolation",
    "RecurrenceCoefficients",
    "closed_form",
    "closed_form_alt",
    "gnomon",
    "generate_first_order",
    "generate_second_order",
    "coefficient_r",
    "coefficient_t",
    "recurrence_coefficients",
    "progression_sums",
    "quotient_direct",
    "quotient_recurrence",
]


class InvariantViolation(RuntimeError):
    """An internal exactness invariant failed; this always indicates a bug."""


def _check_polygon_order(m: int) -> None:
    if not isinstance(m, int):
        raise TypeError(f"polygon order must be an int, got {type(m).__name__}")
    if m < MIN_POLYGON_ORDER:
        raise ValueError(f"polygon order must be >= {MIN_POLYGON_ORDER}, got {m}")


def _check_index(n: int, minimum: int = 1, what: str = "term index") -> None:
    if not isinstance(n, int):
        raise TypeError(f"{what} must be an int, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"{what} must be >= {minimum}, got {n}")


def _exact_half(product: int) -> int:
    half, remainder = divmod(product, 2)
    if remainder:
        raise InvariantViolation(f"{product} is odd; halving it would truncate")
    return half


def closed_form(m: int, n: int) -> int:
    """n-th m-gonal number, S(m, n) = n * ((m - 2) * n - m + 4) / 2.

    The product is always even, so the division is exact.
    """
    _check_polygon_order(m)
    _check_index(n)
    return _exact_half(n * ((m - 2) * n - m + 4))


def closed_form_alt(m: int, n: int) -> int:
    """n-th m-gonal number in the form ((m - 2) / 2) * (n^2 - n) + n.

    Agrees with :func:`closed_form` everywhere; kept as an independent route
    for cross-checking. n^2 - n is always even, so the division is exact.
    """
    _check_polygon_order(m)
    _check_index(n)
    return _exact_half((m - 2) * (n * n - n)) + n


def gnomon(m: int, n: int) -> int:
    """Increment 1 + (m - 2) * n that carries S(m, n) to S(m, n + 1)."""
    _check_polygon_order(m)
    _check_index(n)
    return 1 + (m - 2) * n


def generate_first_order(m: int, count: int) -> list[int]:
    """First `count` m-gonal numbers via S(n+1) = S(n) + gnomon, S(1) = 1."""
    _check_polygon_order(m)
    _check_index(count, what="count")
    terms = [1]
    for n in range(1, count):
        terms.append(terms[-1] + 1 + (m - 2) * n)
    return terms


def coefficient_r(m: int, n: int) -> Fraction:
    """Coefficient of S(m, n-1) in the second-order recurrence, for n >= 3.

    R(n) = (m + 2(n - 2)(m - 2)) / (1 + (n - 2)(m - 2)); always positive.
    """
    _check_polygon_order(m)
    _check_index(n, minimum=3)
    stretch = (n - 2) * (m - 2)
    return Fraction(m + 2 * stretch, 1 + stretch)


def coefficient_t(m: int, n: int) -> Fraction:
    """Coefficient of S(m, n-2) in the second-order recurrence, for n >= 3.

    T(n) = -(m - 1 + (n - 2)(m - 2)) / (1 + (n - 2)(m - 2)); always negative.
    """
    _check_polygon_order(m)
    _check_index(n, minimum=3)
    stretch = (n - 2) * (m - 2)
    return Fraction(-(m - 1 + stretch), 1 + stretch)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Exact coefficient pair (r, t) of the second-order recurrence at index n."""

    r: Fraction
    t: Fraction
    n: int


def recurrence_coefficients(m: int, n: int) -> RecurrenceCoefficients:
    """Both recurrence coefficients at index n >= 3, as one value."""
    return RecurrenceCoefficients(coefficient_r(m, n), coefficient_t(m, n), n)


def generate_second_order(m: int, count: int) -> list[int]:
    """First `count` m-gonal numbers via S(n) = R(n) S(n-1) + T(n) S(n-2).

    Starts from S(1) = 1, S(2) = m. The coefficients are rational, but every
    step must simplify to an integer; a non-integer step raises
    :class:`InvariantViolation` instead of being rounded.
    """
    _check_polygon_order(m)
    _check_index(count, minimum=1, what="count")
    terms = [1, m][:count]
    for n in range(3, count + 1):
        value = coefficient_r(m, n) * terms[-1] + coefficient_t(m, n) * terms[-2]
        if value.denominator != 1:
            raise InvariantViolation(
                f"second-order step gave non-integer {value} at m={m} n={n}"
            )
        terms.append(value.numerator)
    return terms


def progression_sums(m: int, count: int) -> list[int]:
    """Running sums of the progression 1, 1 + (m - 2), 1 + 2(m - 2), ...

    Term-by-term summation, the slowest and most elementary route to the
    m-gonal numbers. Exists purely as a cross-check for the other routes;
    nothing here uses it as a shortcut.
    """
    _check_polygon_order(m)
    _check_index(count, what="count")
    sums = []
    total = 0
    for k in range(count):
        total += 1 + k * (m - 2)
        sums.append(total)
    return sums


def quotient_direct(m: int, count: int) -> list[Fraction]:
    """Quotients x(n) = S(m, n+1) / S(m, n) for n = 1..count, in lowest terms.

    x(1) equals m exactly.
    """
    _check_polygon_order(m)
    _check_index(count, what="count")
    quotients = []
    previous = 1
    for n in range(1, count + 1):
        current = closed_form(m, n + 1)
        quotients.append(Fraction(current, previous))
        previous = current
    return quotients


def quotient_recurrence(m: int, count: int) -> list[Fraction]:
    """Quotients x(n) via their own recurrence, starting from x(1) = m.

    For n >= 2,

        x(n) = (m + 2(n - 1)(m - 2)) / (1 + (n - 1)(m - 2))
               - (m - 1 + (n - 1)(m - 2)) / ((1 + (n - 1)(m - 2)) * x(n - 1))

    which is R(n + 1) + T(n + 1) / x(n - 1) in terms of the recurrence
    coefficients. Must agree with :func:`quotient_direct` element-wise.
    """
    _check_polygon_order(m)
    _check_index(count, what="count")
    quotients = [Fraction(m)]
    for n in range(2, count + 1):
        previous = quotients[-1]
        if previous == 0:
            # unreachable: every quotient exceeds 1; guarded anyway
            raise InvariantViolation(f"zero quotient at m={m} n={n - 1}")
        quotients.append(coefficient_r(m, n + 1) + coefficient_t(m, n + 1) / previous)
    return quotients
