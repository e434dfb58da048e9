#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import pytest

from hermpair.core.errors import DivisionByZero, FieldMismatch, NotPrime, OrderTooLarge
from hermpair.core.field import (
    field_create,
    field_for_q,
    in_subfield,
    inv,
    norm_to_subfield,
    trace_to_subfield,
)


def test_field_orders_and_cache():
    assert field_create(2, 2).order == 4
    assert field_for_q(3).order == 9
    assert field_for_q(4).order == 16
    assert field_create(3, 2) is field_create(3, 2)


def test_field_create_rejects_bad_parameters():
    with pytest.raises(NotPrime):
        field_create(4, 1)
    with pytest.raises(OrderTooLarge):
        field_create(2, 17)
    with pytest.raises(ValueError):
        field_create(2, 0)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_every_nonzero_element_is_invertible(q):
    gf = field_for_q(q)
    for a in gf.elements()[1:]:
        assert a * inv(a) == gf.one


def test_zero_has_no_inverse():
    gf = field_for_q(2)
    with pytest.raises(DivisionByZero):
        inv(gf.zero)
    with pytest.raises(ZeroDivisionError):
        gf.one / gf.zero


def test_elements_of_different_fields_do_not_mix():
    with pytest.raises(FieldMismatch):
        field_for_q(2).one + field_for_q(3).one


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_subfield_has_q_elements_and_contains_norms_and_traces(q):
    gf = field_for_q(q)
    elements = gf.elements()
    assert sum(in_subfield(a) for a in elements) == q
    for a in elements:
        assert in_subfield(norm_to_subfield(a))
        assert in_subfield(trace_to_subfield(a))


@pytest.mark.parametrize("q", [2, 3])
def test_field_operations_agree_with_each_other(q):
    gf = field_for_q(q)
    elements = gf.elements()
    for a in elements:
        assert a + (-a) == gf.zero
        assert a - a == gf.zero
        assert a * gf.one == a
        for b in elements:
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * b == a * b + b * b


def test_power_and_primitive_element():
    gf = field_for_q(3)
    alpha = gf.primitive
    assert alpha ** (gf.order - 1) == gf.one
    assert len({int(alpha**k) for k in range(gf.order - 1)}) == gf.order - 1
