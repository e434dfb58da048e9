#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Linear codes over GF(q^2), nested pairs and exhaustive distances."""

from .linear_code import (
    Descriptor,
    DualOf,
    ImprovedDualPerpSpan,
    ImprovedPrimary,
    LinearCode,
    OnePoint,
    Raw,
    canonical_rows,
    code_from_rows,
    dual,
    extension_basis,
    improved_dual_perp,
    improved_primary,
    onepoint_code,
    parse_descriptor,
    rank,
    stacked_rank,
)
from .nested_pair import DistanceValue, NestedPair, make_pair
from .distance import (
    DistanceResult,
    min_distance,
    min_distance_result,
    relative_distance,
    relative_distance_result,
    relative_dual_distance,
    required_work,
)
from .bounds import (
    dual_distance_bound,
    goppa_distance_bound,
    goppa_dual_distance_bound,
    onepoint_distance_bound,
    relative_distance_bound,
    relative_dual_distance_bound,
)
from .serialization import format_matrix, parse_matrix, read_matrix, write_matrix

__all__ = [
    "Descriptor",
    "DistanceResult",
    "DistanceValue",
    "DualOf",
    "ImprovedDualPerpSpan",
    "ImprovedPrimary",
    "LinearCode",
    "NestedPair",
    "OnePoint",
    "Raw",
    "canonical_rows",
    "code_from_rows",
    "dual",
    "dual_distance_bound",
    "extension_basis",
    "format_matrix",
    "goppa_distance_bound",
    "goppa_dual_distance_bound",
    "improved_dual_perp",
    "improved_primary",
    "make_pair",
    "min_distance",
    "min_distance_result",
    "onepoint_code",
    "onepoint_distance_bound",
    "parse_descriptor",
    "parse_matrix",
    "rank",
    "read_matrix",
    "relative_distance",
    "relative_distance_bound",
    "relative_distance_result",
    "relative_dual_distance",
    "relative_dual_distance_bound",
    "required_work",
    "stacked_rank",
    "write_matrix",
]
