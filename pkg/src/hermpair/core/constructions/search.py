#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Parameter-level enumeration of nested pairs and the best-pair search.

Candidates carry parameters computed from sigma and mu alone; codes are built
only for the pair a search returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from hermpair.core.analysis import delta2_max_oracle, dim_dual_exact, dim_improved_exact
from hermpair.core.codes import NestedPair
from hermpair.core.curve import curve_create
from hermpair.core.errors import NoFeasiblePair
from hermpair.core.semigroup import achievable_deltas, check_q, h_star

from .pairs import (
    improved_pair,
    lower_pole_orders,
    onepoint_pair,
    small_codim_pair_lower,
    small_codim_pair_upper,
    upper_pole_orders,
)
from .params import AQCParams, css_params

Family = Literal["improved", "lower", "upper", "onepoint"]
Objective = Literal["dz", "ell"]

SEARCH_FAMILIES = ("improved", "lower", "upper")


@dataclass(frozen=True, order=True)
class PairCandidate:
    family: str
    key: tuple[int, int]
    ell: int
    dz: int
    dx: int
    lam1: int
    q: int

    @property
    def n(self) -> int:
        return self.q**3

    @property
    def degenerate(self) -> bool:
        """One side has distance 1 (C2 = {0} or C1 the full space)."""

        return self.dz == 1 or self.dx == 1

    @property
    def label(self) -> str:
        return f"{self.family}{self.key}"

    def build(self) -> NestedPair:
        ctx = curve_create(self.q)
        if self.family == "improved":
            return improved_pair(ctx, *self.key)
        if self.family == "lower":
            return small_codim_pair_lower(ctx, *self.key)
        if self.family == "upper":
            return small_codim_pair_upper(ctx, *self.key)
        return onepoint_pair(ctx, *self.key)

    def params(self, alphabet: int) -> AQCParams:
        return AQCParams(
            n=self.n,
            ell=self.ell,
            dz=self.dz,
            dx=self.dx,
            alphabet=alphabet,
            provenance={"n": "formula", "l": "formula", "dz": "formula", "dx": "formula"},
            construction=self.label,
        )


def _count_between(lams: np.ndarray, low: int, high: int) -> int:
    return int(np.count_nonzero((lams > low) & (lams <= high)))


@lru_cache(maxsize=None)
def _improved_candidates(q: int) -> tuple[PairCandidate, ...]:
    elements = h_star(q)
    deltas = achievable_deltas(q)
    primary = {d: dim_improved_exact(q, d) for d in deltas}
    dual_span = {d: dim_dual_exact(q, d) for d in deltas}
    candidates = []
    for delta1 in deltas:
        limit = delta2_max_oracle(q, delta1)
        top = max(e.lam for e in elements if e.sigma >= delta1)
        for delta2 in deltas:
            if delta2 > limit:
                break
            ell = primary[delta1] - dual_span[delta2]
            if ell < 1:
                continue
            candidates.append(
                PairCandidate("improved", (delta1, delta2), ell, delta1, delta2, top, q)
            )
    return tuple(candidates)


@lru_cache(maxsize=None)
def _corner_candidates(q: int) -> tuple[PairCandidate, ...]:
    n = q**3
    candidates = []
    for i in range(q):
        for j in range(i, q):
            ell = j - i + 1
            lam1, _ = lower_pole_orders(q, i, j)
            candidates.append(
                PairCandidate("lower", (i, j), ell, n - lam1, (i + 1) * (j + 1), lam1, q)
            )
            lam1, _ = upper_pole_orders(q, i, j)
            candidates.append(
                PairCandidate(
                    "upper",
                    (i, j),
                    ell,
                    (i + 1) * (j + 1),
                    n - i * q - j * (q + 1),
                    lam1,
                    q,
                )
            )
    return tuple(candidates)


@dataclass(frozen=True)
class OnePointWindow:
    """All one-point pairs C_L(lam1 Q) > C_L(lam2 Q) sharing one lam2.

    Entry k of each array belongs to the pair of codimension k + 1. The order
    bounds `dz` and `dx` are non-increasing along the window.
    """

    lam2: int
    lam1: np.ndarray
    dz: np.ndarray
    dx: np.ndarray

    def usable(self, min_dx: int) -> int:
        """Number of leading pairs with dx >= min_dx."""

        return int(np.count_nonzero(self.dx >= min_dx))


def onepoint_windows(q: int):
    """Yield one OnePointWindow per lam2, from the zero code (lam2 = -1) upwards."""

    n = q**3
    elements = h_star(q)
    lams = np.array([e.lam for e in elements], dtype=np.int64)
    sigmas = np.array([e.sigma for e in elements], dtype=np.int64)
    mus = np.array([e.mu for e in elements], dtype=np.int64)
    for low in range(-1, n - 1):
        yield OnePointWindow(
            lam2=-1 if low < 0 else int(lams[low]),
            lam1=lams[low + 1 :],
            dz=np.minimum.accumulate(sigmas[low + 1 :]),
            dx=np.minimum.accumulate(mus[low + 1 :]),
        )


def _onepoint_candidates(q: int, min_dx: int = 1):
    # lazily: q=16 has about 8M one-point pairs
    for window in onepoint_windows(q):
        for k in range(window.usable(min_dx)):
            lam1 = int(window.lam1[k])
            yield PairCandidate(
                "onepoint",
                (lam1, window.lam2),
                k + 1,
                int(window.dz[k]),
                int(window.dx[k]),
                lam1,
                q,
            )


def pair_candidates(q: int, families=SEARCH_FAMILIES) -> list[PairCandidate]:
    """All candidate pairs of the requested families, with their parameters."""

    check_q(q)
    builders = {
        "improved": _improved_candidates,
        "lower": lambda q: tuple(c for c in _corner_candidates(q) if c.family == "lower"),
        "upper": lambda q: tuple(c for c in _corner_candidates(q) if c.family == "upper"),
        "onepoint": _onepoint_candidates,
    }
    candidates = []
    for family in families:
        if family not in builders:
            raise ValueError(f'Unknown pair family "{family}"')
        candidates.extend(builders[family](q))
    return candidates


@dataclass(frozen=True)
class SearchResult:
    candidate: PairCandidate
    params: AQCParams
    pair: NestedPair | None = None


def _rank(objective: Objective, candidate: PairCandidate):
    primary = candidate.dz if objective == "dz" else candidate.ell
    family_order = ("improved", "lower", "upper", "onepoint").index(candidate.family)
    return (
        -primary,
        -candidate.dz,
        -candidate.ell,
        -candidate.dx,
        candidate.lam1,
        family_order,
        candidate.key,
    )


def best_pair_search(
    q: int,
    objective: Objective = "dz",
    *,
    min_ell: int = 1,
    min_dz: int = 1,
    min_dx: int = 1,
    families=SEARCH_FAMILIES,
    build: bool = False,
) -> SearchResult:
    """Best nested pair for an objective under lower bounds on l, d_z and d_x.

    Degenerate pairs (a side of distance 1) are skipped. Ties go to the larger
    d_z, then the larger l, then the smaller top pole order.
    """

    if objective not in ("dz", "ell"):
        raise ValueError(f'Unknown objective "{objective}"; use "dz" or "ell"')
    feasible = [
        c
        for c in pair_candidates(q, families)
        if not c.degenerate and c.ell >= min_ell and c.dz >= min_dz and c.dx >= min_dx
    ]
    if not feasible:
        raise NoFeasiblePair(
            f"no pair for q={q} with l >= {min_ell}, d_z >= {min_dz}, d_x >= {min_dx}"
        )
    best = min(feasible, key=lambda c: _rank(objective, c))
    if build:
        pair = best.build()
        return SearchResult(best, css_params(pair), pair)
    return SearchResult(best, best.params(q * q))
