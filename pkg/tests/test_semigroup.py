#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import pytest

from hermpair.core.constructions.tables import SEMIGROUP_Q4
from hermpair.core.errors import NotInHStar, UnsupportedQ
from hermpair.core.semigroup import (
    achievable_deltas,
    check_q,
    compose,
    decompose,
    gaps,
    genus,
    h_star,
    h_of_q_contains,
    h_star_values,
    mirror,
    mu_formula,
    mu_oracle,
    round_up_delta,
    sigma_formula,
    sigma_oracle,
    verify_order_bound_lemmas,
)


def test_q2_elements_and_order_bounds():
    elements = h_star(2)
    assert h_star_values(2) == (0, 2, 3, 4, 5, 6, 7, 9)
    assert [e.sigma for e in elements] == [8, 6, 5, 4, 3, 2, 2, 1]
    assert [e.mu for e in elements] == [1, 2, 2, 3, 4, 5, 6, 8]


def test_q4_grids_match_reference_table():
    q = 4
    for row, j in enumerate(range(q - 1, -1, -1)):
        for i in range(q * q):
            lam = compose(q, i, j)
            assert lam == SEMIGROUP_Q4["lambda"][row][i]
            assert sigma_formula(q, lam) == SEMIGROUP_Q4["sigma"][row][i]
            assert mu_formula(q, lam) == SEMIGROUP_Q4["mu"][row][i]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_formulas_agree_with_oracles(q):
    for lam in h_star_values(q):
        assert sigma_formula(q, lam) == sigma_oracle(q, lam)
        assert mu_formula(q, lam) == mu_oracle(q, lam)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_gap_count_is_genus(q):
    assert len(gaps(q)) == genus(q)
    assert len(h_star(q)) == q**3


@pytest.mark.parametrize("q", [2, 3, 4])
def test_membership_matches_generator_sums(q):
    sums = {u * q + v * (q + 1) for u in range(2 * q) for v in range(2 * q)}
    for x in range(-1, q * q + q):
        assert h_of_q_contains(q, x) == (x in sums)
    assert gaps(3) == [1, 2, 5]


def test_decompose_and_mirror():
    assert decompose(2, 5) == (1, 1)
    assert decompose(3, 28) == (8, 1)
    assert mirror(2, 0) == 9
    assert mirror(2, mirror(2, 4)) == 4
    with pytest.raises(NotInHStar):
        decompose(2, 1)
    with pytest.raises(NotInHStar):
        compose(2, 4, 0)


def test_unsupported_q():
    with pytest.raises(UnsupportedQ):
        check_q(6)
    with pytest.raises(UnsupportedQ):
        h_star(17)


def test_achievable_deltas_and_rounding():
    assert achievable_deltas(2) == (1, 2, 3, 4, 5, 6, 8)
    assert round_up_delta(2, 7) == 8
    assert round_up_delta(2, 4) == 4
    with pytest.raises(ValueError):
        round_up_delta(2, 9)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_order_bound_lemmas_hold(q):
    report = verify_order_bound_lemmas(q)
    assert report.passed, report.as_dict()
    assert len(report.results) == 7
    assert all(result.checked > 0 for result in report.results)


def test_corner_monotone_checks_the_j_range_of_h_star():
    result = verify_order_bound_lemmas(2)["corner-monotone"]
    assert result.passed
    assert "0 <= j <= q-1" in result.note
    assert "suspected typo" in result.note


@pytest.mark.exhaustive
def test_order_bound_lemmas_hold_q5():
    assert verify_order_bound_lemmas(5).passed
