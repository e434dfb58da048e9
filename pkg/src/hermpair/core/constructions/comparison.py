#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Parameter formulas of competing asymmetric quantum code constructions.

Only the parameters are computed; none of these codes is built. Every
formula validates its hypotheses and names the first one that fails.
"""

from __future__ import annotations

import math

from hermpair.core.analysis import interval_ceil
from hermpair.core.errors import ConstraintViolated, ParityViolated

from .params import AQCParams


def _require(condition: bool, constraint: str, detail: str = ""):
    if not condition:
        raise ConstraintViolated(constraint, detail)


def la_guardia_params(m1: int, m2: int, k: int, c: int, *, q: int = 3) -> AQCParams:
    """Generalized Reed-Solomon asymmetric codes over GF(q^2).

    [[m1*m2, m1(2k - m2 + c), d/(d - c)]] with d = m2 - k + 1.
    """

    d = m2 - k + 1
    detail = f"m1={m1}, m2={m2}, k={k}, c={c}, d={d}"
    _require(c >= 1, "c >= 1", detail)
    _require(m1 >= 1, "m1 >= 1", detail)
    _require(1 < k, "1 < k", detail)
    _require(k < m2, "k < m2", detail)
    _require(m2 < 2 * k + c, "m2 < 2k + c", detail)
    _require(2 * k + c <= q ** (2 * m1), "2k + c <= q^(2 m1)", detail)
    _require(d > c + 1, "d > c + 1", detail)
    _require(m2 > c + 1, "m2 > c + 1", detail)
    return AQCParams(
        n=m1 * m2,
        ell=m1 * (2 * k - m2 + c),
        dz=d,
        dx=d - c,
        alphabet=q * q,
        provenance={"n": "formula", "l": "formula", "dz": "formula", "dx": "formula"},
        construction=f"grs({m1},{m2},{k},{c})",
    )


def cartesian_v(s: int, m: int, delta1: int) -> int:
    """Largest v in 0..m-1 with s^v <= delta1."""

    v = 0
    while v + 1 <= m - 1 and s ** (v + 1) <= delta1:
        v += 1
    return v


def cartesian_delta2_limit(s: int, m: int, delta1: int) -> int:
    """floor((s - delta1/s^v + 1) s^(m-v+1)) in exact arithmetic."""

    v = cartesian_v(s, m, delta1)
    return ((s + 1) * s**v - delta1) * s ** (m - v + 1) // s**v


def cartesian_params_general(
    s: int, m: int, delta1: int, delta2: int, *, alphabet: int | None = None
) -> AQCParams:
    """Cartesian product codes [[s^m, >= l, delta1/delta2]] with a logarithmic l bound.

    l is the ceiling of
    s^m - sum_{t=1}^{m} (delta1 ln(s^m/delta1)^(t-1) + delta2 ln(s^m/delta2)^(t-1)) / (t-1)!
    """

    n = s**m
    detail = f"s={s}, m={m}, delta1={delta1}, delta2={delta2}"
    _require(m >= 2, "m >= 2", detail)
    _require(s >= 2, "s >= 2", detail)
    if alphabet is not None:
        _require(s <= alphabet, "s <= alphabet size", detail)
    _require(1 <= delta1 <= n, "1 <= delta1 <= s^m", detail)
    _require(1 <= delta2 <= n, "1 <= delta2 <= s^m", detail)
    limit = cartesian_delta2_limit(s, m, delta1)
    _require(delta2 <= limit, "delta2 <= floor((s - delta1/s^v + 1) s^(m-v+1))", detail)

    def expression(ctx):
        total = ctx.mpf(n)
        for delta in (delta1, delta2):
            total -= delta
            if delta == n:
                continue
            logarithm = ctx.log(n) - ctx.log(delta)
            for t in range(2, m + 1):
                total -= ctx.mpf(delta) * logarithm ** (t - 1) / math.factorial(t - 1)
        return total

    ell = interval_ceil(expression)
    _require(ell >= 1, "l >= 1", f"{detail}, l bound {ell}")
    return AQCParams(
        n=n,
        ell=ell,
        dz=delta1,
        dx=delta2,
        alphabet=alphabet if alphabet is not None else s,
        ell_is_lower_bound=True,
        provenance={"n": "formula", "l": "bound", "dz": "formula", "dx": "formula"},
        construction=f"cartesian({s},{m})",
    )


def cartesian_params_plane(
    s: int,
    m: int,
    ell: int,
    *,
    alphabet: int | None = None,
    interchange: bool = False,
) -> AQCParams:
    """Codes on an s x s grid: [[s^2, l, d_z/d_x]] with quarter-product distances."""

    detail = f"s={s}, m={m}, l={ell}"
    _require(s > 1, "1 < s", detail)
    if alphabet is not None:
        _require(s <= alphabet, "s <= alphabet size", detail)
    _require(0 <= m <= s - 1, "0 <= m <= s - 1", detail)
    _require(1 <= ell <= m + 1, "1 <= l <= m + 1", detail)
    if (ell % 2 == 0) != (m % 2 == 1):
        raise ParityViolated("l even iff m odd", detail)
    dz = (2 * s - (m - ell + 1)) * (2 * s - (m + ell - 1)) // 4
    dx = (m - ell + 3) * (m + ell + 1) // 4
    if interchange:
        dz, dx = dx, dz
    return AQCParams(
        n=s * s,
        ell=ell,
        dz=dz,
        dx=dx,
        alphabet=alphabet if alphabet is not None else s,
        provenance={"n": "formula", "l": "formula", "dz": "formula", "dx": "formula"},
        construction=f"plane({s},{m})",
    )
