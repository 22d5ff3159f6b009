"""Exact arithmetic on angles that are rational multiples of pi.

Angles are plain ``fractions.Fraction`` values in units of pi, so the angle
value ``Fraction(2, 3)`` means 2*pi/3.  The key primitive is an exact decision
procedure for equalities sin(x1*pi)*sin(x2*pi) = sin(x3*pi)*sin(x4*pi) with all
arguments in [0, 1/2].  Every rational solution of that equation falls into one
of four known classes (two trivial ones, a one-parameter family, and a finite
sporadic list), so equality can be decided by pattern matching.  A
high-precision numeric evaluation is used as a guard on every positive answer,
never as the decider.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import mpmath as mp

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)

# Numeric guard configuration.  For denominators up to ~360 a 50-digit
# evaluation separates equal from unequal products by far more than the
# threshold; both constants must be raised together if the denominator bound
# is raised.
GUARD_DIGITS = 50
GUARD_THRESHOLD = Fraction(1, 10**30)


class FoldedSine(NamedTuple):
    """Representative in [0, 1/2] with sin(x*pi) = sign * sin(folded*pi)."""

    folded: Fraction
    sign: int


def fold_sine(x: Fraction) -> FoldedSine:
    """Fold any rational angle into the fundamental sine domain [0, 1/2]."""
    t = Fraction(x) % 2
    sign = 1
    if t >= 1:
        sign = -1
        t -= 1
    if t > HALF:
        t = 1 - t
    if t == 0:
        return FoldedSine(Fraction(0), 0)
    return FoldedSine(t, sign)


# Sporadic solutions of sin(x1)sin(x2) = sin(x3)sin(x4) on rational multiples
# of pi in [0, 1/2] that belong to no parametric class.  Each row is stored as
# ((x1, x2), (x3, x4)) with x1 < x3 <= x4 < x2.  Every row is re-verified by
# the high-precision numeric guard whenever it is matched.
_ROWS = [
    ((1, 21), (8, 21), (1, 14), (3, 14)),
    ((1, 14), (5, 14), (2, 21), (5, 21)),
    ((4, 21), (10, 21), (3, 14), (5, 14)),
    ((1, 20), (9, 20), (1, 15), (4, 15)),
    ((2, 15), (7, 15), (3, 20), (7, 20)),
    ((1, 30), (3, 10), (1, 15), (2, 15)),
    ((1, 15), (7, 15), (1, 10), (7, 30)),
    ((1, 10), (13, 30), (2, 15), (4, 15)),
    ((4, 15), (7, 15), (3, 10), (11, 30)),
    ((1, 30), (11, 30), (1, 10), (1, 10)),
    ((7, 30), (13, 30), (3, 10), (3, 10)),
    ((1, 15), (4, 15), (1, 10), (1, 6)),
    ((2, 15), (7, 15), (1, 6), (3, 10)),
    ((1, 12), (5, 12), (1, 10), (3, 10)),
    ((1, 10), (3, 10), (1, 6), (1, 6)),
]

SPORADIC_SINE_PRODUCTS: frozenset[tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]] = frozenset(
    (
        (Fraction(*r[0]), Fraction(*r[1])),
        (Fraction(*r[2]), Fraction(*r[3])),
    )
    for r in _ROWS
)


class SineGuardError(AssertionError):
    """The pattern matcher and the numeric oracle disagree (data corruption)."""


def numeric_value(x: Fraction, precision_digits: int = GUARD_DIGITS) -> mp.mpf:
    """x*pi evaluated to the requested number of decimal digits."""
    if precision_digits < 15:
        raise ValueError("precision_digits must be >= 15")
    with mp.workdps(precision_digits):
        return mp.mpf(x.numerator) / x.denominator * mp.pi


def sine_products_close(
    x1: Fraction, x2: Fraction, x3: Fraction, x4: Fraction,
    digits: int = GUARD_DIGITS,
    threshold: Fraction = GUARD_THRESHOLD,
) -> bool:
    """Numeric oracle: |sin(x1)sin(x2) - sin(x3)sin(x4)| < threshold."""
    with mp.workdps(digits):
        lhs = mp.sinpi(mp.mpf(x1.numerator) / x1.denominator) * mp.sinpi(
            mp.mpf(x2.numerator) / x2.denominator
        )
        rhs = mp.sinpi(mp.mpf(x3.numerator) / x3.denominator) * mp.sinpi(
            mp.mpf(x4.numerator) / x4.denominator
        )
        return abs(lhs - rhs) < mp.mpf(threshold.numerator) / threshold.denominator


def _matches_half_family(p: tuple[Fraction, Fraction], q: tuple[Fraction, Fraction]) -> bool:
    # {1/6, theta} against {theta/2, 1/2 - theta/2} for some 0 < theta <= 1/2.
    for i in (0, 1):
        if p[i] == SIXTH:
            theta = p[1 - i]
            if 0 < theta <= HALF and {theta / 2, HALF - theta / 2} == set(q):
                return True
    return False


def sine_product_equal(x1: Fraction, x2: Fraction, x3: Fraction, x4: Fraction) -> bool:
    """Decide sin(x1*pi)sin(x2*pi) == sin(x3*pi)sin(x4*pi) exactly.

    All inputs must already lie in [0, 1/2]; callers fold first and keep track
    of signs themselves.
    """
    for x in (x1, x2, x3, x4):
        if not 0 <= x <= HALF:
            raise ValueError(f"argument {x} outside [0, 1/2]")
    lhs = tuple(sorted((x1, x2)))
    rhs = tuple(sorted((x3, x4)))

    lhs_zero = lhs[0] == 0
    rhs_zero = rhs[0] == 0
    if lhs_zero or rhs_zero:
        result = lhs_zero and rhs_zero
    elif lhs == rhs:
        result = True
    elif _matches_half_family(lhs, rhs) or _matches_half_family(rhs, lhs):
        result = True
    elif (lhs, rhs) in SPORADIC_SINE_PRODUCTS or (rhs, lhs) in SPORADIC_SINE_PRODUCTS:
        result = True
    else:
        result = False

    if result and not sine_products_close(x1, x2, x3, x4):
        raise SineGuardError(f"pattern match not confirmed numerically: {lhs} vs {rhs}")
    return result
