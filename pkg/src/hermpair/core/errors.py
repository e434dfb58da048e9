#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Exception hierarchy shared by every `hermpair` module.

Errors caused by invalid arguments derive from `ValueError` so that callers can
catch them generically; the command line maps them to the usage exit code.
"""


class HermpairError(Exception):
    """Base class of all errors raised by `hermpair`."""


# Field arithmetic


class NotPrime(HermpairError, ValueError):
    """The requested characteristic is not a prime."""


class OrderTooLarge(HermpairError, ValueError):
    """The requested field order exceeds the supported cap of 2**16."""


class NoBundledModulus(HermpairError, ValueError):
    """No Conway polynomial is available for the requested field."""


class FieldMismatch(HermpairError, ValueError):
    """Elements of two different fields were combined."""


class DivisionByZero(HermpairError, ZeroDivisionError):
    """The zero element was inverted."""


class NotASquareOrder(HermpairError, ValueError):
    """A subfield map was requested on a field whose order is not a square."""


# Curve and semigroup


class UnsupportedQ(HermpairError, ValueError):
    """The Hermitian parameter q is not a supported prime power."""


class NotInHStar(HermpairError, ValueError):
    """A pole order is not an element of H*(Q)."""


# Codes


class BudgetExceeded(HermpairError, RuntimeError):
    """An exhaustive enumeration needs more work than the budget allows."""

    def __init__(self, required, budget, what="enumeration"):
        self.required = required
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs {required} message vectors but the budget is {budget}"
        )


class NotNested(HermpairError, ValueError):
    """The second code of a pair is not contained in the first."""


class ZeroCodimension(HermpairError, ValueError):
    """Both codes of a pair are equal."""


# Analysis


class DeltaOutOfRange(HermpairError, ValueError):
    """A designed distance lies outside the range of the requested bound."""


class NotAchievableDelta(HermpairError, ValueError):
    """A designed distance is not a value of sigma on H*(Q)."""


class InclusionViolated(HermpairError, ValueError):
    """The dual-side designed distance exceeds the inclusion threshold."""


# Constructions


class BadIndices(HermpairError, ValueError):
    """Indices (i, j) of a small-codimension pair are out of range."""


class ConstraintViolated(HermpairError, ValueError):
    """A parameter formula was called outside its hypotheses."""

    def __init__(self, constraint, detail=""):
        self.constraint = constraint
        message = f"constraint violated: {constraint}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class ParityViolated(ConstraintViolated):
    """The parity condition between l and m does not hold."""


class ShrinkNotAllowed(HermpairError, ValueError):
    """Padding was asked to shorten a code."""


class NoFeasiblePair(HermpairError, ValueError):
    """No candidate pair satisfies the search constraints."""


# Secret sharing


class LengthMismatch(HermpairError, ValueError):
    """A secret or share vector has the wrong length."""


class InconsistentShares(HermpairError, ValueError):
    """The given shares are not the restriction of any codeword."""
