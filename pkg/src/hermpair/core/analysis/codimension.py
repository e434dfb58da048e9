#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Codimension of C~(delta2)^perp inside E~(delta1)."""

from __future__ import annotations

from dataclasses import dataclass
import warnings

from hermpair.core.errors import InclusionViolated, NotAchievableDelta
from hermpair.core.semigroup import achievable_deltas, check_q, genus

from .dimensions import dim_bound_value, dim_dual_exact, dim_improved_exact
from .inclusion import delta2_max


@dataclass(frozen=True)
class CodimBoundResult:
    q: int
    delta1: int
    delta2: int
    bound: int
    regime: str
    case: str

    @property
    def vacuous(self) -> bool:
        return self.bound <= 0


def _regime(q: int, delta: int) -> str:
    if delta <= q:
        return "small"
    if delta <= q * q - q:
        return "mixed"
    if delta < q**3 - 2 * genus(q) + 2:
        return "generic"
    return "high"


def codim_exact(q: int, delta1: int, delta2: int) -> int:
    """dim E~(delta1) - dim C~(delta2)^perp from the sigma and mu counts."""

    return dim_improved_exact(q, delta1) - dim_dual_exact(q, delta2)


def codim_bound_result(q: int, delta1: int, delta2: int) -> CodimBoundResult:
    """Lower bound on the codimension from the dimension bounds of both codes.

    dim C~(delta2)^perp = q^3 - dim E~(delta2), so the bound is
    dimbound(delta1) + dimbound(delta2) - q^3; its regime follows delta1 and
    its case follows delta2.
    """

    check_q(q)
    deltas = achievable_deltas(q)
    for delta in (delta1, delta2):
        if delta not in deltas:
            raise NotAchievableDelta(f"{delta} is not a designed distance for q={q}")
    threshold = delta2_max(q, delta1).delta2_max
    if delta2 > threshold:
        raise InclusionViolated(
            f"C~({delta2})^perp is not contained in E~({delta1}) "
            f"(delta2 must be at most {threshold})"
        )
    bound = dim_bound_value(q, delta1) + dim_bound_value(q, delta2) - q**3
    result = CodimBoundResult(
        q=q,
        delta1=delta1,
        delta2=delta2,
        bound=bound,
        regime=_regime(q, delta1),
        case=_regime(q, delta2),
    )
    if result.vacuous:
        warnings.warn(
            f"codimension bound for q={q}, ({delta1}, {delta2}) is vacuous ({bound})"
        )
    return result


def codim_bound(q: int, delta1: int, delta2: int) -> int:
    return codim_bound_result(q, delta1, delta2).bound
