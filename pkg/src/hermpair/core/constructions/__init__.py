#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Nested pair constructions, parameter records, searches and comparisons."""

from .params import (
    AQCParams,
    RampParams,
    css_params,
    pad_to_length,
    ramp_params,
    swap_roles,
    threshold_gap_bound,
)
from .pairs import (
    improved_pair,
    is_strict,
    lower_pole_orders,
    onepoint_pair,
    small_codim_pair_lower,
    small_codim_pair_upper,
    upper_pole_orders,
)
from .search import (
    SEARCH_FAMILIES,
    OnePointWindow,
    PairCandidate,
    SearchResult,
    best_pair_search,
    onepoint_windows,
    pair_candidates,
)
from .sharing_curve import CURVE_FAMILIES, CurveRow, sharing_curve
from .comparison import (
    cartesian_delta2_limit,
    cartesian_params_general,
    cartesian_params_plane,
    cartesian_v,
    la_guardia_params,
)
from . import tables

__all__ = [
    "AQCParams",
    "CURVE_FAMILIES",
    "CurveRow",
    "OnePointWindow",
    "PairCandidate",
    "RampParams",
    "SEARCH_FAMILIES",
    "SearchResult",
    "best_pair_search",
    "cartesian_delta2_limit",
    "cartesian_params_general",
    "cartesian_params_plane",
    "cartesian_v",
    "css_params",
    "improved_pair",
    "is_strict",
    "la_guardia_params",
    "lower_pole_orders",
    "onepoint_pair",
    "onepoint_windows",
    "pad_to_length",
    "pair_candidates",
    "ramp_params",
    "sharing_curve",
    "small_codim_pair_lower",
    "small_codim_pair_upper",
    "swap_roles",
    "tables",
    "threshold_gap_bound",
    "upper_pole_orders",
]
