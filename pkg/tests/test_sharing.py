#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
from itertools import combinations

import numpy as np
import pytest

from hermpair.core.codes import relative_distance, relative_dual_distance
from hermpair.core.constructions import (
    improved_pair,
    small_codim_pair_lower,
    small_codim_pair_upper,
)
from hermpair.core.context import run_context
from hermpair.core.curve import curve_create
from hermpair.core.errors import BudgetExceeded, InconsistentShares, LengthMismatch
from hermpair.core.sharing import (
    ShareBundle,
    Undetermined,
    deal,
    dealer_spec,
    draw_coefficients,
    exact_privacy_number,
    exact_reconstruction_number,
    format_shares,
    information_gain,
    parse_shares,
    perfect_privacy_check,
    read_scheme,
    read_secret,
    read_shares,
    reconstruct,
    write_scheme,
    write_secret,
    write_shares,
)


@pytest.fixture
def spec():
    return dealer_spec(small_codim_pair_lower(curve_create(2), 1, 1))


def test_dealer_spec_shape(spec):
    assert (spec.n, spec.ell, spec.k2) == (8, 1, 4)
    assert spec.basis.shape == (5, 8)
    assert len(spec.scheme_id) == 16


def test_exact_audit_q2(spec):
    assert exact_privacy_number(spec) == 3
    assert exact_reconstruction_number(spec) == 6


@pytest.mark.parametrize("deltas", [(4, 3), (5, 2), (3, 3)])
def test_audit_matches_relative_distances(deltas):
    pair = improved_pair(curve_create(2), *deltas)
    spec = dealer_spec(pair)
    assert exact_privacy_number(spec) == relative_dual_distance(pair) - 1
    assert exact_reconstruction_number(spec) == pair.n - relative_distance(pair) + 1


@pytest.mark.parametrize(
    "build, indices, expected",
    [
        (small_codim_pair_lower, (1, 1), (3, 6)),
        (small_codim_pair_lower, (0, 1), (1, 4)),
        (small_codim_pair_upper, (0, 1), (4, 7)),
        (small_codim_pair_upper, (1, 1), (2, 5)),
    ],
)
def test_small_codim_audit_matches_formulas(build, indices, expected):
    pair = build(curve_create(2), *indices)
    spec = dealer_spec(pair)
    t = exact_privacy_number(spec)
    r = exact_reconstruction_number(spec)
    assert (t, r) == expected
    assert t == pair.d_rel_dual.value - 1
    assert r == pair.n - pair.d_rel.value + 1


@pytest.mark.parametrize(
    "build, args",
    [
        (small_codim_pair_lower, (1, 1)),
        (small_codim_pair_upper, (0, 1)),
        (improved_pair, (4, 3)),
        (improved_pair, (5, 2)),
        (improved_pair, (3, 3)),
    ],
)
def test_deal_and_reconstruct(build, args):
    spec = dealer_spec(build(curve_create(2), *args))
    rng = np.random.default_rng(11)
    for seed in range(100):
        secret = tuple(int(x) for x in rng.integers(0, 4, size=spec.ell))
        bundle = deal(spec, secret, seed=seed)
        assert len(bundle) == 8
        assert bundle.indices == tuple(range(1, 9))
        assert reconstruct(spec, bundle) == secret


def test_reconstruction_threshold(spec):
    bundle = deal(spec, (3,), seed=1)
    for subset in combinations(range(1, 9), 6):
        assert reconstruct(spec, bundle.subset(subset)) == (3,)
    outcomes = [reconstruct(spec, bundle.subset(s)) for s in combinations(range(1, 9), 5)]
    assert any(isinstance(outcome, Undetermined) for outcome in outcomes)
    for subset in combinations(range(1, 9), 3):
        outcome = reconstruct(spec, bundle.subset(subset))
        assert outcome == Undetermined(free=(0,), determined={})
    assert reconstruct(spec, ShareBundle({})) == Undetermined(free=(0,), determined={})


def test_zero_secret_with_zero_randomness(spec):
    bundle = deal(spec, (0,), coefficients=[0, 0, 0, 0])
    assert set(bundle.shares.values()) == {0}


def test_inconsistent_shares_are_rejected(spec):
    bundle = deal(spec, (2,), seed=3)
    shares = dict(bundle.shares)
    shares[1] = (shares[1] + 1) % 4
    with pytest.raises(InconsistentShares):
        reconstruct(spec, ShareBundle(shares, bundle.scheme_id))
    with pytest.raises(InconsistentShares, match="belong to scheme"):
        reconstruct(spec, ShareBundle(bundle.shares, "0" * 16))


def test_bad_lengths(spec):
    with pytest.raises(LengthMismatch):
        deal(spec, (1, 2))
    with pytest.raises(LengthMismatch):
        deal(spec, (1,), coefficients=[0, 0])
    with pytest.raises(ValueError, match="field indices"):
        deal(spec, (4,))
    with pytest.raises(KeyError):
        ShareBundle({1: 0}).subset([1, 2])


def test_seeded_randomness_is_reproducible(spec):
    first = draw_coefficients(spec, 5)
    assert np.array_equal(first, draw_coefficients(spec, 5))
    with run_context(seed=5):
        assert np.array_equal(first, draw_coefficients(spec))
        assert deal(spec, (1,)) == deal(spec, (1,), seed=5)


def test_system_randomness():
    spec = dealer_spec(small_codim_pair_lower(curve_create(2), 1, 1), "system")
    assert reconstruct(spec, deal(spec, (2,))) == (2,)
    with pytest.raises(ValueError, match="randomness"):
        dealer_spec(small_codim_pair_lower(curve_create(2), 1, 1), "dice")


def test_information_gain(spec):
    assert information_gain(spec, ()) == 0
    assert information_gain(spec, range(1, 9)) == 1
    assert information_gain(spec, (1, 2, 3)) == 0


def test_perfect_privacy(spec):
    assert perfect_privacy_check(spec, 3).passed
    check = perfect_privacy_check(spec, 4)
    assert not check.passed
    assert information_gain(spec, check.counterexample) > 0


def test_audit_budget(spec):
    with pytest.raises(BudgetExceeded):
        exact_privacy_number(spec, budget=5)
    with pytest.raises(BudgetExceeded):
        perfect_privacy_check(spec, 4, budget=1000)


@pytest.mark.parallel
def test_audit_with_threads(spec):
    assert exact_privacy_number(spec, workers=2) == 3
    assert exact_reconstruction_number(spec, workers=2) == 6


def test_scheme_and_share_files(spec, tmp_path):
    loaded = read_scheme(write_scheme(spec, tmp_path / "scheme.yaml"))
    assert loaded.scheme_id == spec.scheme_id
    assert loaded.pair.construction == "lower(1,1)"

    bundle = deal(spec, (1,), seed=2)
    restored = read_shares(write_shares(bundle.subset([2, 4, 5, 6, 7, 8]), tmp_path / "s.txt"))
    assert restored.scheme_id == spec.scheme_id
    assert reconstruct(loaded, restored) == (1,)

    assert read_secret(write_secret((1,), tmp_path / "secret.txt")) == (1,)


def test_share_text_errors():
    assert parse_shares(format_shares(ShareBundle({2: 3}))) == ShareBundle({2: 3})
    with pytest.raises(InconsistentShares, match="twice"):
        parse_shares("1:0\n1:2\n")
    with pytest.raises(ValueError, match="expected"):
        parse_shares("1 0\n")
