#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Smallest reconstruction number per secret length at a required privacy number.

A scheme for secrets of length l' >= l also shares zero-padded secrets of length
l with the same t and r, so each row minimizes over all pairs of codimension at
least l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from hermpair.core.semigroup import check_q, genus

from .params import threshold_gap_bound
from .search import onepoint_windows, pair_candidates

CURVE_FAMILIES = ("improved", "lower", "upper", "onepoint")
UNREACHABLE = np.iinfo(np.int64).max


@dataclass(frozen=True)
class CurveRow:
    ell: int
    r_construction: int | None
    construction: str
    r_goppa: int | None
    r_gap_bound: int

    def as_dict(self) -> dict:
        return {
            "l": self.ell,
            "r_construction": self.r_construction,
            "construction": self.construction,
            "r_goppa": self.r_goppa,
            "r_gap_bound": self.r_gap_bound,
        }


def _suffix_minimum(best_r, labels, max_ell):
    # codimension at least l; ties keep the longer secret's scheme
    rows = [None] * (max_ell + 1)
    running = None
    for ell in range(max_ell, 0, -1):
        if best_r[ell] < UNREACHABLE and (running is None or best_r[ell] < running[0]):
            running = (int(best_r[ell]), labels[ell])
        rows[ell] = running
    return rows


def sharing_curve(q: int, t: int) -> list[CurveRow]:
    """Rows for every l reachable with privacy number at least t.

    The smallest r wins each length. Ties keep the first scheme offered, in the
    order improved, lower, upper, then one-point pairs by ascending pole orders.
    One-point pairs are reduced a whole window of lam1 values at a time.
    """

    check_q(q)
    n = q**3
    if not 0 <= t < n:
        raise ValueError(f"t={t} must lie in [0, {n})")
    g = genus(q)
    best_r = np.full(n + 2, UNREACHABLE, dtype=np.int64)
    labels = [""] * (n + 2)
    goppa_r = np.full(n + 2, UNREACHABLE, dtype=np.int64)

    for candidate in pair_candidates(q, ("improved", "lower", "upper")):
        r = n - candidate.dz + 1
        if candidate.dx - 1 >= t and r < best_r[candidate.ell]:
            best_r[candidate.ell] = r
            labels[candidate.ell] = candidate.label

    for window in onepoint_windows(q):
        usable = window.usable(t + 1)
        if usable:
            ells = np.arange(1, usable + 1)
            rs = n - window.dz[:usable] + 1
            for k in np.flatnonzero(rs < best_r[ells]):
                best_r[k + 1] = rs[k]
                labels[k + 1] = f"onepoint({int(window.lam1[k])},{window.lam2})"
        # Goppa parameters: dz = n - lam1, dx = lam2 - 2g + 2
        if max(1, window.lam2 - 2 * g + 2) - 1 >= t:
            reach = int(np.count_nonzero(window.lam1 <= n - 1))
            ells = np.arange(1, reach + 1)
            goppa_r[ells] = np.minimum(goppa_r[ells], window.lam1[:reach] + 1)

    reachable = np.flatnonzero(best_r < UNREACHABLE)
    max_ell = int(reachable.max()) if reachable.size else 0
    best = _suffix_minimum(best_r, labels, max_ell)
    best_goppa = _suffix_minimum(goppa_r, labels, max_ell)
    rows = []
    for ell in range(1, max_ell + 1):
        r, label = best[ell]
        rows.append(
            CurveRow(
                ell=ell,
                r_construction=r,
                construction=label,
                r_goppa=best_goppa[ell][0] if best_goppa[ell] is not None else None,
                r_gap_bound=t + threshold_gap_bound(q, n, ell),
            )
        )
    return rows
