#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Hermitian curve places and monomial evaluation."""

from .curve import (
    CurveContext,
    MonomialFunction,
    curve_create,
    evaluate,
    evaluation_matrix,
    monomial_for,
)

__all__ = [
    "CurveContext",
    "MonomialFunction",
    "curve_create",
    "evaluate",
    "evaluation_matrix",
    "monomial_for",
]
