#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""The nested pair constructions.

improved
    E~(delta1) over C~(delta2)^perp; relative distances delta1 and delta2.
lower, upper
    one-point pairs of small codimension j - i + 1 in the two corners of
    H*(Q); the upper pair is the dual of the lower one.
onepoint
    arbitrary one-point pairs C_L(lam1 Q) > C_L(lam2 Q) with relative order
    bounds as distances.
"""

from __future__ import annotations

from hermpair.core.analysis import inclusion_holds, is_achievable
from hermpair.core.codes import (
    DistanceValue,
    NestedPair,
    dual_distance_bound,
    improved_dual_perp,
    improved_primary,
    make_pair,
    onepoint_code,
    onepoint_distance_bound,
    relative_distance_bound,
    relative_dual_distance_bound,
)
from hermpair.core.curve import CurveContext
from hermpair.core.errors import BadIndices, InclusionViolated, NotAchievableDelta


def improved_pair(ctx: CurveContext, delta1: int, delta2: int) -> NestedPair:
    q = ctx.q
    for delta in (delta1, delta2):
        if not is_achievable(q, delta):
            raise NotAchievableDelta(f"{delta} is not a designed distance for q={q}")
    if not inclusion_holds(q, delta1, delta2):
        raise InclusionViolated(
            f"C~({delta2})^perp is not contained in E~({delta1}) for q={q}"
        )
    return make_pair(
        improved_primary(ctx, delta1),
        improved_dual_perp(ctx, delta2),
        d_rel=DistanceValue(delta1),
        d_rel_dual=DistanceValue(delta2),
        d_c1=DistanceValue(delta1),
        d_c2_dual=DistanceValue(delta2),
        construction=f"improved({delta1},{delta2})",
    )


def _check_indices(q: int, i: int, j: int):
    if not 0 <= i <= j < q:
        raise BadIndices(f"(i, j)=({i}, {j}) must satisfy 0 <= i <= j < {q}")


def lower_pole_orders(q: int, i: int, j: int) -> tuple[int, int]:
    _check_indices(q, i, j)
    return i * q + j * (q + 1), j * q + i * (q + 1) - 1


def upper_pole_orders(q: int, i: int, j: int) -> tuple[int, int]:
    """Pole orders of the dual of the lower (i, j) pair."""

    _check_indices(q, i, j)
    top = q * q - 1
    return (
        (top - j) * q + (q - 1 - i) * (q + 1),
        (top - i) * q + (q - 1 - j) * (q + 1) - 1,
    )


def is_strict(q: int, i: int, j: int) -> bool:
    """(i+1)(j+1) exceeds the corresponding non-relative distance."""

    return i != 0 and j != q - 1


def _onepoint_pair(ctx, lam1, lam2, d_rel, d_rel_dual, construction) -> NestedPair:
    q = ctx.q
    return make_pair(
        onepoint_code(ctx, lam1),
        onepoint_code(ctx, lam2),
        d_rel=DistanceValue(d_rel),
        d_rel_dual=DistanceValue(d_rel_dual),
        d_c1=DistanceValue(onepoint_distance_bound(q, lam1)),
        d_c2_dual=DistanceValue(dual_distance_bound(q, lam2)),
        construction=construction,
    )


def small_codim_pair_lower(ctx: CurveContext, i: int, j: int) -> NestedPair:
    """C_L(lam1 Q) > C_L(lam2 Q), lam1 = iq + j(q+1), lam2 = jq + i(q+1) - 1."""

    q = ctx.q
    lam1, lam2 = lower_pole_orders(q, i, j)
    return _onepoint_pair(
        ctx, lam1, lam2, q**3 - lam1, (i + 1) * (j + 1), f"lower({i},{j})"
    )


def small_codim_pair_upper(ctx: CurveContext, i: int, j: int) -> NestedPair:
    """Mirror of the lower pair: d_rel = (i+1)(j+1), d_rel_dual = q^3 - iq - j(q+1)."""

    q = ctx.q
    lam1, lam2 = upper_pole_orders(q, i, j)
    return _onepoint_pair(
        ctx,
        lam1,
        lam2,
        (i + 1) * (j + 1),
        q**3 - i * q - j * (q + 1),
        f"upper({i},{j})",
    )


def onepoint_pair(ctx: CurveContext, lam1: int, lam2: int) -> NestedPair:
    """C_L(lam1 Q) > C_L(lam2 Q) with relative order bounds as distances."""

    q = ctx.q
    return _onepoint_pair(
        ctx,
        lam1,
        lam2,
        relative_distance_bound(q, lam1, lam2),
        relative_dual_distance_bound(q, lam1, lam2),
        f"onepoint({lam1},{lam2})",
    )
