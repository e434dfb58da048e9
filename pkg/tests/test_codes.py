#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import pytest

from hermpair.core.analysis import dim_dual_exact
from hermpair.core.codes import (
    DualOf,
    ImprovedPrimary,
    OnePoint,
    dual,
    dual_distance_bound,
    format_matrix,
    goppa_distance_bound,
    improved_dual_perp,
    improved_primary,
    make_pair,
    onepoint_code,
    onepoint_distance_bound,
    parse_descriptor,
    parse_matrix,
    read_matrix,
    relative_distance_bound,
    relative_dual_distance_bound,
    write_matrix,
)
from hermpair.core.curve import curve_create
from hermpair.core.errors import DeltaOutOfRange, LengthMismatch, NotNested, ZeroCodimension
from hermpair.core.semigroup import achievable_deltas, h_star_values


def test_onepoint_dimensions():
    ctx = curve_create(2)
    assert onepoint_code(ctx, 5).k == 5
    assert onepoint_code(ctx, 1).k == 1
    assert onepoint_code(ctx, -1).k == 0
    assert onepoint_code(ctx, 9).k == 8


@pytest.mark.parametrize("q", [2, 3, 4])
def test_onepoint_duality(q):
    ctx = curve_create(q)
    top = q**3 + q**2 - q - 2
    for lam in h_star_values(q):
        assert dual(onepoint_code(ctx, lam)).row_space_equals(
            onepoint_code(ctx, top - lam)
        )


@pytest.mark.parametrize("q", [2, 3, 4])
def test_improved_primary_is_dual_of_improved_dual_perp(q):
    ctx = curve_create(q)
    for delta in range(1, q**3 + 1):
        assert dual(improved_dual_perp(ctx, delta)).row_space_equals(
            improved_primary(ctx, delta)
        )


def test_improved_code_equals_onepoint_code_for_large_delta():
    ctx = curve_create(3)
    code = improved_primary(ctx, 12)
    assert code.k == 13
    assert code.row_space_equals(onepoint_code(ctx, 15))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_improved_code_equals_onepoint_code_above_corner(q):
    ctx = curve_create(q)
    high = [d for d in achievable_deltas(q) if d > q * q - q]
    assert high
    for delta in high:
        code = improved_primary(ctx, delta)
        assert code.row_space_equals(onepoint_code(ctx, q**3 - delta))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_improved_code_is_strictly_larger_at_corner(q):
    ctx = curve_create(q)
    improved = improved_primary(ctx, q * q - q)
    onepoint = onepoint_code(ctx, q**3 - q * q + q)
    assert onepoint.is_subcode_of(improved)
    assert improved.k > onepoint.k


def test_improved_dual_perp_dimension_q4():
    assert improved_dual_perp(curve_create(4), 48).k == 53
    assert dim_dual_exact(4, 48) == 53


def test_improved_code_rejects_out_of_range_delta():
    with pytest.raises(DeltaOutOfRange):
        improved_primary(curve_create(2), 0)
    with pytest.raises(DeltaOutOfRange):
        improved_primary(curve_create(2), 9)


def test_make_pair_checks_nesting():
    ctx = curve_create(2)
    pair = make_pair(onepoint_code(ctx, 5), onepoint_code(ctx, 4))
    assert pair.codimension == 1
    assert pair.dual().c1.k == 4
    assert pair.dual().c2.k == 3
    with pytest.raises(NotNested):
        make_pair(onepoint_code(ctx, 4), onepoint_code(ctx, 5))
    with pytest.raises(ZeroCodimension):
        make_pair(onepoint_code(ctx, 5), onepoint_code(ctx, 5))


def test_descriptor_labels():
    assert parse_descriptor("onepoint:5") == OnePoint(5)
    assert parse_descriptor("dual(improved:3)") == DualOf(ImprovedPrimary(3))
    assert dual(onepoint_code(curve_create(2), 4)).descriptor == DualOf(OnePoint(4))
    with pytest.raises(ValueError, match="Unknown code descriptor"):
        parse_descriptor("hamming:3")


def test_matrix_file(tmp_path):
    ctx = curve_create(3)
    code = improved_primary(ctx, 20)
    path = write_matrix(code, tmp_path / "code.txt")
    loaded = read_matrix(path)
    assert loaded.row_space_equals(code)
    assert loaded.descriptor == ImprovedPrimary(20)
    assert format_matrix(code).splitlines()[0] == f"3 27 {code.k} improved:20"


def test_matrix_text_errors():
    with pytest.raises(LengthMismatch):
        parse_matrix("2 8 1 raw\n1 0 0\n")
    with pytest.raises(ValueError, match="header announces"):
        parse_matrix("2 8 2 raw\n1 0 0 0 0 0 0 0\n")
    with pytest.raises(ValueError, match="field indices"):
        parse_matrix("2 8 1 raw\n7 0 0 0 0 0 0 0\n")


def test_order_bounds_q2():
    assert onepoint_distance_bound(2, 5) == 3
    assert goppa_distance_bound(2, 5) == 3
    assert dual_distance_bound(2, 4) == 4
    assert relative_distance_bound(2, 5, 4) == 3
    assert relative_dual_distance_bound(2, 5, 4) == 4
    assert onepoint_distance_bound(2, -1) == 9
