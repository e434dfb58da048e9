#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Closed-form dimension, inclusion and codimension results with their oracles."""

from .floors import floor_delta_log, floor_delta_log_ratio, interval_ceil, interval_floor
from .dimensions import (
    DimBoundResult,
    dim_bound,
    dim_bound_value,
    dim_dual_exact,
    dim_improved_exact,
    integer_point_bound,
    is_achievable,
    split_qq1,
    triangle,
)
from .inclusion import (
    InclusionResult,
    delta2_max,
    delta2_max_oracle,
    inclusion_holds,
    inclusion_symmetric,
)
from .codimension import CodimBoundResult, codim_bound, codim_bound_result, codim_exact

__all__ = [
    "CodimBoundResult",
    "DimBoundResult",
    "InclusionResult",
    "codim_bound",
    "codim_bound_result",
    "codim_exact",
    "delta2_max",
    "delta2_max_oracle",
    "dim_bound",
    "dim_bound_value",
    "dim_dual_exact",
    "dim_improved_exact",
    "floor_delta_log",
    "floor_delta_log_ratio",
    "inclusion_holds",
    "inclusion_symmetric",
    "integer_point_bound",
    "interval_ceil",
    "interval_floor",
    "is_achievable",
    "split_qq1",
    "triangle",
]
