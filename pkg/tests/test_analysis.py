#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import warnings

import pytest

from hermpair.core.analysis import (
    codim_bound,
    codim_bound_result,
    codim_exact,
    delta2_max,
    delta2_max_oracle,
    dim_bound,
    dim_dual_exact,
    dim_improved_exact,
    floor_delta_log,
    floor_delta_log_ratio,
    inclusion_holds,
    inclusion_symmetric,
    integer_point_bound,
    interval_ceil,
    interval_floor,
    split_qq1,
    triangle,
)
from hermpair.core.constructions.tables import IMPROVED_DIMENSIONS
from hermpair.core.errors import DeltaOutOfRange, InclusionViolated, NotAchievableDelta
from hermpair.core.semigroup import achievable_deltas


def test_interval_floors():
    assert interval_floor(lambda ctx: ctx.mpf(7) / 2) == 3
    assert interval_ceil(lambda ctx: ctx.mpf(7) / 2) == 4
    assert interval_floor(lambda ctx: ctx.mpf(3)) == 3
    assert floor_delta_log(1) == 1
    assert floor_delta_log(2) == 3
    assert floor_delta_log(3) == 6
    assert floor_delta_log_ratio(4, 16) == 16


def test_small_helpers():
    assert triangle(0, 0) == 1
    assert triangle(-1, 0) == 0
    assert triangle(1, 1) == 6
    assert split_qq1(4, 9) == (1, 1)
    assert integer_point_bound(4, 16) == 0
    with pytest.raises(DeltaOutOfRange):
        integer_point_bound(4, 17)


def test_dim_bound_examples():
    result = dim_bound(4, 3)
    assert (result.bound, result.exact, result.rule) == (58, 61, "small-delta")
    result = dim_bound(3, 12)
    assert (result.bound, result.exact, result.rule) == (13, 13, "generic")


def test_dim_bound_rounds_up_unachievable_delta():
    with pytest.warns(UserWarning, match="not a designed distance"):
        result = dim_bound(2, 7)
    assert (result.requested, result.delta) == (7, 8)
    assert result.bound == result.exact == 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_dim_bound_never_exceeds_exact_dimension(q):
    for delta in achievable_deltas(q):
        result = dim_bound(q, delta)
        assert result.bound <= result.exact


def test_tabulated_improved_dimensions():
    for q, dimensions in IMPROVED_DIMENSIONS.items():
        for delta, dimension in dimensions.items():
            assert dim_improved_exact(q, delta) == dimension


def test_dual_dimension_counts_mu():
    assert dim_dual_exact(2, 1) == 0
    assert dim_dual_exact(2, 2) == 1
    assert dim_dual_exact(2, 9) == 8


def test_delta2_max_example():
    result = delta2_max(4, 6, with_oracle=True)
    assert result.delta2_max == 48
    assert result.rule == "right-mixed"
    assert result.agrees
    assert delta2_max(4, 48).delta2_max == 8


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_delta2_max_matches_oracle(q):
    for delta1 in achievable_deltas(q):
        if delta1 < 2:
            continue
        result = delta2_max(q, delta1)
        assert result.delta2_max == delta2_max_oracle(q, delta1), result


def test_delta2_max_rejects_bad_delta():
    with pytest.raises(NotAchievableDelta):
        delta2_max(2, 1)
    with pytest.raises(NotAchievableDelta):
        delta2_max(2, 7)


@pytest.mark.parametrize("q", [2, 3])
def test_inclusion_condition_is_symmetric(q):
    deltas = achievable_deltas(q)
    for delta1 in deltas:
        for delta2 in deltas:
            forward, backward = inclusion_symmetric(q, delta1, delta2)
            assert forward == backward
            assert forward == inclusion_holds(q, delta2, delta1)


def test_codimension_q2():
    assert codim_exact(2, 2, 2) == 6
    assert codim_bound(2, 2, 2) == 2
    assert codim_bound(4, 4, 4) == 46
    assert codim_exact(4, 4, 4) == 54
    result = codim_bound_result(2, 2, 2)
    assert (result.regime, result.case) == ("small", "small")


def test_codimension_requires_inclusion():
    with pytest.raises(InclusionViolated):
        codim_bound(4, 6, 49)
    with pytest.raises(NotAchievableDelta):
        codim_bound(2, 7, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_codim_bound_never_exceeds_exact(q):
    deltas = achievable_deltas(q)
    for delta1 in deltas:
        if delta1 < 2:
            continue
        limit = delta2_max(q, delta1).delta2_max
        for delta2 in deltas:
            if delta2 > limit:
                break
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                bound = codim_bound(q, delta1, delta2)
            assert bound <= codim_exact(q, delta1, delta2)
