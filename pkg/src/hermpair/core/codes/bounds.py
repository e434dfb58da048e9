#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Order bounds for one-point codes, their duals and one-point pairs.

An empty minimum is reported as n + 1 (no nonzero word exists).
"""

from functools import lru_cache

import numpy as np

from hermpair.core.semigroup import code_length, genus, h_star


@lru_cache(maxsize=None)
def _tables(q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    elements = h_star(q)
    lams = np.array([e.lam for e in elements], dtype=np.int64)
    sigmas = np.array([e.sigma for e in elements], dtype=np.int64)
    mus = np.array([e.mu for e in elements], dtype=np.int64)
    return lams, sigmas, mus


def _window_min(q: int, values: np.ndarray, mask: np.ndarray) -> int:
    if not mask.any():
        return code_length(q) + 1
    return int(values[mask].min())


def onepoint_distance_bound(q: int, lam: int) -> int:
    """min sigma(eta) over eta in H*(Q) with eta <= lam."""

    lams, sigmas, _ = _tables(q)
    return _window_min(q, sigmas, lams <= lam)


def dual_distance_bound(q: int, lam: int) -> int:
    """min mu(gamma) over gamma in H*(Q) with gamma > lam."""

    lams, _, mus = _tables(q)
    return _window_min(q, mus, lams > lam)


def relative_distance_bound(q: int, lam1: int, lam2: int) -> int:
    """Bound on d(C_L(lam1 Q), C_L(lam2 Q)): min sigma over lam2 < eta <= lam1."""

    lams, sigmas, _ = _tables(q)
    return _window_min(q, sigmas, (lams > lam2) & (lams <= lam1))


def relative_dual_distance_bound(q: int, lam1: int, lam2: int) -> int:
    """Bound on the dual pair's relative distance: min mu over lam2 < gamma <= lam1."""

    lams, _, mus = _tables(q)
    return _window_min(q, mus, (lams > lam2) & (lams <= lam1))


def goppa_distance_bound(q: int, lam: int) -> int:
    return code_length(q) - lam


def goppa_dual_distance_bound(q: int, lam: int) -> int:
    return lam - 2 * genus(q) + 2
