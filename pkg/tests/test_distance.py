#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import pytest

from hermpair.core.analysis import dim_improved_exact
from hermpair.core.codes import (
    dual,
    dual_distance_bound,
    improved_primary,
    make_pair,
    min_distance,
    min_distance_result,
    onepoint_code,
    relative_distance,
    relative_dual_distance,
    required_work,
)
from hermpair.core.constructions import small_codim_pair_lower, small_codim_pair_upper
from hermpair.core.context import run_context
from hermpair.core.curve import curve_create
from hermpair.core.errors import BudgetExceeded
from hermpair.core.semigroup import achievable_deltas, h_star_values


def test_improved_codes_reach_designed_distance_q2():
    ctx = curve_create(2)
    for delta in achievable_deltas(2):
        assert min_distance(improved_primary(ctx, delta)) == delta


def test_improved_codes_reach_designed_distance_q3_small_dimension():
    ctx = curve_create(3)
    deltas = [d for d in achievable_deltas(3) if dim_improved_exact(3, d) <= 3]
    assert deltas == [23, 24, 27]
    for delta in deltas:
        assert min_distance(improved_primary(ctx, delta)) == delta


@pytest.mark.exhaustive
def test_improved_codes_reach_designed_distance_q3():
    ctx = curve_create(3)
    deltas = [d for d in achievable_deltas(3) if dim_improved_exact(3, d) <= 7]
    assert {23, 24, 27} <= set(deltas)
    for delta in deltas:
        assert min_distance(improved_primary(ctx, delta)) == delta


def test_zero_code_distance():
    ctx = curve_create(2)
    result = min_distance_result(onepoint_code(ctx, -1))
    assert result.value == 9
    assert result.exhaustive


def test_relative_distances_q2():
    ctx = curve_create(2)
    pair = make_pair(onepoint_code(ctx, 5), onepoint_code(ctx, 4))
    assert relative_distance(pair) == 3
    assert relative_dual_distance(pair) == 4


@pytest.mark.parametrize("build", [small_codim_pair_lower, small_codim_pair_upper])
@pytest.mark.parametrize("indices", [(0, 0), (0, 1), (1, 1)])
def test_small_codim_distances_are_exact(build, indices):
    pair = build(curve_create(2), *indices)
    assert relative_distance(pair) == pair.d_rel.value
    assert relative_dual_distance(pair) == pair.d_rel_dual.value


def test_dual_onepoint_codes_meet_order_bound_q2():
    ctx = curve_create(2)
    for lam in h_star_values(2):
        code = dual(onepoint_code(ctx, lam))
        assert min_distance(code) >= dual_distance_bound(2, lam)


def test_budget_is_enforced():
    code = improved_primary(curve_create(2), 3)
    assert required_work(4, code.k) == 4**5
    with pytest.raises(BudgetExceeded):
        min_distance(code, budget=100)
    with run_context(budget=100):
        with pytest.raises(BudgetExceeded):
            min_distance(code)


def test_stop_at_ends_search_early():
    code = improved_primary(curve_create(2), 3)
    result = min_distance_result(code, stop_at=8)
    assert not result.exhaustive
    assert result.value >= 3
    assert result.visited < result.required


@pytest.mark.parallel
def test_threads_give_same_distance():
    ctx = curve_create(2)
    for delta in (2, 4, 6):
        code = improved_primary(ctx, delta)
        assert min_distance(code, workers=3) == min_distance(code, workers=1)
