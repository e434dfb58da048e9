#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import numpy as np
import pytest

from hermpair.core.codes import relative_distance, relative_dual_distance
from hermpair.core.constructions import (
    CURVE_FAMILIES,
    best_pair_search,
    cartesian_params_general,
    cartesian_params_plane,
    css_params,
    improved_pair,
    is_strict,
    la_guardia_params,
    lower_pole_orders,
    onepoint_pair,
    onepoint_windows,
    pad_to_length,
    pair_candidates,
    ramp_params,
    sharing_curve,
    small_codim_pair_lower,
    small_codim_pair_upper,
    swap_roles,
    tables,
    threshold_gap_bound,
    upper_pole_orders,
)
from hermpair.core.curve import curve_create
from hermpair.core.errors import (
    BadIndices,
    ConstraintViolated,
    InclusionViolated,
    NoFeasiblePair,
    ParityViolated,
    ShrinkNotAllowed,
)
from hermpair.core.workflow.tables import compare_with_reference


def test_pole_orders():
    assert lower_pole_orders(3, 1, 2) == (11, 9)
    assert upper_pole_orders(2, 1, 1) == (4, 3)
    assert upper_pole_orders(3, 0, 1) == (29, 27)
    assert is_strict(3, 1, 1)
    assert not is_strict(3, 0, 1)
    assert not is_strict(3, 1, 2)
    with pytest.raises(BadIndices):
        lower_pole_orders(3, 2, 1)
    with pytest.raises(BadIndices):
        upper_pole_orders(3, 0, 3)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_small_codim_candidates_match_reference_table(q):
    candidates = {c.key: c for c in pair_candidates(q, ("lower",))}
    for key, expected in tables.SMALL_CODIM[q].items():
        candidate = candidates[key]
        assert (candidate.ell, candidate.dz, candidate.dx) == expected


@pytest.mark.parametrize("q", [3, 4])
def test_small_codim_pairs_have_announced_codimension(q):
    ctx = curve_create(q)
    for (i, j), (ell, dz, dx) in tables.SMALL_CODIM[q].items():
        lower = small_codim_pair_lower(ctx, i, j)
        assert lower.codimension == ell
        assert (lower.d_rel.value, lower.d_rel_dual.value) == (dz, dx)
        upper = small_codim_pair_upper(ctx, i, j)
        assert upper.codimension == ell
        assert (upper.d_rel.value, upper.d_rel_dual.value) == (dx, dz)


def test_upper_pair_is_dual_of_lower_pair():
    ctx = curve_create(3)
    lower = small_codim_pair_lower(ctx, 1, 2)
    upper = small_codim_pair_upper(ctx, 1, 2)
    flipped = lower.dual()
    assert flipped.c1.row_space_equals(upper.c1)
    assert flipped.c2.row_space_equals(upper.c2)


def test_upper_pair_example_q3():
    pair = small_codim_pair_upper(curve_create(3), 0, 1)
    params = css_params(pair)
    assert (params.ell, params.dz, params.dx) == (2, 2, 23)
    assert params.label == "[[27,2,2/23]]_9"


def test_lower_pair_distances_are_exact_q2():
    ctx = curve_create(2)
    pair = small_codim_pair_lower(ctx, 1, 1)
    assert (pair.c1.k, pair.c2.k) == (5, 4)
    assert relative_distance(pair) == pair.d_rel.value == 3
    assert relative_dual_distance(pair) == pair.d_rel_dual.value == 4
    assert ramp_params(pair).as_dict() == {"n": 8, "l": 1, "t": 3, "r": 6}


def test_onepoint_pair_uses_order_bounds_q2():
    pair = onepoint_pair(curve_create(2), 5, 4)
    assert pair.codimension == 1
    assert pair.construction == "onepoint(5,4)"
    assert pair.d_rel.value == 3 == relative_distance(pair)
    assert 1 <= pair.d_rel_dual.value <= relative_dual_distance(pair)


def test_matched_improved_pairs_q2():
    ctx = curve_create(2)
    for (delta1, delta2), (ell, dz, dx) in tables.MATCHED_Q2.items():
        pair = improved_pair(ctx, delta1, delta2)
        assert pair.codimension == ell
        assert relative_distance(pair) == dz
        assert relative_dual_distance(pair) == dx


def test_improved_pair_requires_inclusion():
    ctx = curve_create(4)
    improved_pair(ctx, 6, 48)
    with pytest.raises(InclusionViolated):
        improved_pair(ctx, 6, 49)


def test_impurity_flag():
    pure = css_params(small_codim_pair_lower(curve_create(3), 2, 2))
    assert pure.impure is False
    impure = css_params(small_codim_pair_lower(curve_create(4), 2, 2))
    assert impure.impure is True


def test_param_helpers():
    params = la_guardia_params(2, 13, 2, 10, q=3)
    assert params.label == "[[26,2,12/2]]_9"
    padded = pad_to_length(params, 27)
    assert padded.label == "[[27,2,12/2]]_9"
    assert padded.provenance["n"] == "padded"
    assert swap_roles(padded).label == "[[27,2,2/12]]_9"
    with pytest.raises(ShrinkNotAllowed):
        pad_to_length(params, 25)
    assert threshold_gap_bound(3, 27, 1) == 1


def test_la_guardia_names_failed_constraint():
    with pytest.raises(ConstraintViolated, match="m2 < 2k \\+ c"):
        la_guardia_params(2, 13, 2, 1, q=3)


def test_grs_reference_rows():
    for row in tables.GRS_Q3:
        params = pad_to_length(la_guardia_params(row.m1, row.m2, row.k, row.c, q=3), 27)
        assert (params.ell, params.dz, params.dx) == row.reference


def test_cartesian_reference_rows():
    for row in tables.CARTESIAN_Q3:
        ell, dz, dx = row.reference
        if row.kind == "plane":
            params = cartesian_params_plane(row.s, row.m, ell, alphabet=9)
        else:
            params = cartesian_params_general(row.s, row.m, dz, dx, alphabet=9)
        assert (params.ell, params.dz, params.dx) == row.reference
        assert pad_to_length(params, 27).n == 27


def test_cartesian_constraints():
    with pytest.raises(ParityViolated):
        cartesian_params_plane(5, 2, 2)
    with pytest.raises(ConstraintViolated):
        cartesian_params_plane(5, 5, 1)
    with pytest.raises(ConstraintViolated, match="l >= 1"):
        cartesian_params_general(5, 2, 7, 25)
    assert cartesian_params_general(5, 2, 7, 1).label == "[[25,>=5,7/1]]_5"


@pytest.mark.parametrize(
    "objective, constraints, expected",
    [
        ("dz", {"min_ell": 2, "min_dx": 2}, (2, 23, 2)),
        ("ell", {"min_dz": 12, "min_dx": 2}, (12, 12, 2)),
        ("dz", {"min_ell": 5, "min_dx": 1}, (5, 19, 2)),
        ("dz", {"min_ell": 5, "min_dx": 5}, (5, 13, 6)),
        ("ell", {"min_dz": 5, "min_dx": 5}, (13, 6, 6)),
        ("ell", {"min_dz": 7, "min_dx": 1}, (17, 7, 2)),
        ("ell", {"min_dz": 2, "min_dx": 1}, (25, 2, 2)),
        ("dz", {"min_ell": 2, "min_dx": 3}, (2, 20, 3)),
    ],
)
def test_best_pair_search_q3(objective, constraints, expected):
    result = best_pair_search(3, objective, **constraints)
    candidate = result.candidate
    assert (candidate.ell, candidate.dz, candidate.dx) == expected
    assert not candidate.degenerate


def test_best_pair_search_builds_pair():
    result = best_pair_search(2, "dz", min_ell=1, min_dx=3, build=True)
    assert result.pair is not None
    assert result.pair.codimension == result.params.ell
    assert result.params.dz == result.candidate.dz


def test_best_pair_search_without_solution():
    with pytest.raises(NoFeasiblePair):
        best_pair_search(2, "dz", min_ell=8, min_dz=2, min_dx=2)
    with pytest.raises(ValueError, match="Unknown objective"):
        best_pair_search(2, "dx")


def test_search_dominates_reference_tables():
    for row in tables.GRS_Q3:
        reference = pad_to_length(la_guardia_params(row.m1, row.m2, row.k, row.c), 27)
        by_dz, by_ell, dominates = compare_with_reference(reference, row.dz_max, row.ell_max)
        assert dominates, row
        assert by_dz.ell >= reference.ell and by_ell.dz >= reference.dz
    for row in tables.CARTESIAN_Q3:
        ell, dz, dx = row.reference
        if row.kind == "plane":
            params = cartesian_params_plane(row.s, row.m, ell, alphabet=9)
        else:
            params = cartesian_params_general(row.s, row.m, dz, dx, alphabet=9)
        _, _, dominates = compare_with_reference(pad_to_length(params, 27), row.dz_max, row.ell_max)
        assert dominates, row


def test_sharing_curve_q3():
    rows = sharing_curve(3, 3)
    first = rows[0]
    assert first.ell == 1
    assert (first.r_construction, first.r_goppa, first.r_gap_bound) == (8, 10, 4)
    for row in rows:
        assert row.r_gap_bound <= row.r_construction
        if row.r_goppa is not None:
            assert row.r_construction <= row.r_goppa
    assert any(row.r_goppa is None or row.r_construction < row.r_goppa for row in rows)
    assert [row.ell for row in rows] == list(range(1, len(rows) + 1))
    with pytest.raises(ValueError):
        sharing_curve(3, 27)


def test_onepoint_windows_q2():
    windows = list(onepoint_windows(2))
    assert len(windows) == 8
    assert windows[0].lam2 == -1
    assert windows[0].lam1.tolist() == [0, 2, 3, 4, 5, 6, 7, 9]
    assert windows[0].dz.tolist() == [8, 6, 5, 4, 3, 2, 2, 1]
    assert windows[-1].lam2 == 7
    assert windows[-1].lam1.tolist() == [9]
    for window in windows:
        assert (np.diff(window.dz) <= 0).all()
        assert (np.diff(window.dx) <= 0).all()
    assert windows[0].usable(2) == 0
    assert windows[1].dx.tolist() == [2] * 7
    assert windows[1].usable(2) == 7
    assert len(pair_candidates(2, ("onepoint",))) == 36


def _curve_by_enumeration(q, t):
    n = q**3
    best = {}
    for candidate in pair_candidates(q, CURVE_FAMILIES):
        if candidate.dx - 1 >= t:
            r = n - candidate.dz + 1
            best[candidate.ell] = min(best.get(candidate.ell, r), r)
    running = None
    rs = []
    for ell in range(max(best, default=0), 0, -1):
        if ell in best and (running is None or best[ell] < running):
            running = best[ell]
        rs.append(running)
    return rs[::-1]


@pytest.mark.parametrize("q, t", [(2, 0), (2, 1), (2, 3), (3, 0), (3, 5)])
def test_sharing_curve_matches_enumeration(q, t):
    rows = sharing_curve(q, t)
    assert [row.r_construction for row in rows] == _curve_by_enumeration(q, t)
