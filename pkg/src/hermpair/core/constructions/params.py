#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Asymmetric quantum code and ramp secret sharing parameters of nested pairs."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
import math

from hermpair.core.codes import NestedPair
from hermpair.core.errors import ConstraintViolated, ShrinkNotAllowed


@dataclass(frozen=True)
class AQCParams:
    """[[n, l, d_z/d_x]] over an alphabet of size `alphabet`.

    `provenance` maps each of "n", "l", "dz", "dx" to how it was obtained
    (formula, bruteforce, padded or bound). `impure` is None when the
    non-relative distances are unknown.
    """

    n: int
    ell: int
    dz: int
    dx: int
    alphabet: int
    impure: bool | None = None
    ell_is_lower_bound: bool = False
    provenance: dict = field(default_factory=dict, compare=False)
    construction: str = field(default="", compare=False)

    def __post_init__(self):
        if not 1 <= self.ell <= self.n:
            raise ConstraintViolated("1 <= l <= n", f"l={self.ell}, n={self.n}")
        if self.dz < 1 or self.dx < 1:
            raise ConstraintViolated("d_z, d_x >= 1", f"d_z={self.dz}, d_x={self.dx}")

    @property
    def label(self) -> str:
        ell = f">={self.ell}" if self.ell_is_lower_bound else str(self.ell)
        return f"[[{self.n},{ell},{self.dz}/{self.dx}]]_{self.alphabet}"

    @property
    def key(self) -> tuple[int, int, int, int]:
        return self.n, self.ell, self.dz, self.dx

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.ell,
            "dz": self.dz,
            "dx": self.dx,
            "alphabet": self.alphabet,
            "impure": self.impure,
            "construction": self.construction,
        }


@dataclass(frozen=True)
class RampParams:
    """Ramp scheme with n shares, secrets of length l, privacy t, reconstruction r."""

    n: int
    ell: int
    t: int
    r: int
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not 0 <= self.t < self.r <= self.n:
            raise ConstraintViolated(
                "0 <= t < r <= n", f"t={self.t}, r={self.r}, n={self.n}"
            )
        if self.r - self.t < self.ell:
            raise ConstraintViolated("r - t >= l", f"r={self.r}, t={self.t}, l={self.ell}")

    @property
    def gap(self) -> int:
        return self.r - self.t

    def as_dict(self) -> dict:
        return {"n": self.n, "l": self.ell, "t": self.t, "r": self.r}


def _require_distances(pair: NestedPair):
    if pair.d_rel is None or pair.d_rel_dual is None:
        raise ValueError(f"{pair!r} carries no relative distance values")
    return pair.d_rel, pair.d_rel_dual


def css_params(pair: NestedPair) -> AQCParams:
    """CSS parameters d_z = d(C1, C2), d_x = d(C2^perp, C1^perp)."""

    d_rel, d_rel_dual = _require_distances(pair)
    impure = None
    checks = []
    if pair.d_c1 is not None:
        checks.append(d_rel.value > pair.d_c1.value)
    if pair.d_c2_dual is not None:
        checks.append(d_rel_dual.value > pair.d_c2_dual.value)
    if checks:
        impure = any(checks)
    return AQCParams(
        n=pair.n,
        ell=pair.codimension,
        dz=d_rel.value,
        dx=d_rel_dual.value,
        alphabet=pair.c1.ctx.field.order,
        impure=impure,
        provenance={
            "n": "formula",
            "l": "bruteforce",
            "dz": d_rel.provenance,
            "dx": d_rel_dual.provenance,
        },
        construction=pair.construction,
    )


def ramp_params(pair: NestedPair) -> RampParams:
    """t = d(C2^perp, C1^perp) - 1 and r = n - d(C1, C2) + 1."""

    d_rel, d_rel_dual = _require_distances(pair)
    return RampParams(
        n=pair.n,
        ell=pair.codimension,
        t=d_rel_dual.value - 1,
        r=pair.n - d_rel.value + 1,
        provenance={"t": d_rel_dual.provenance, "r": d_rel.provenance},
    )


def swap_roles(params: AQCParams) -> AQCParams:
    """Interchange d_z and d_x, as realized by the dual pair."""

    provenance = dict(params.provenance)
    provenance["dz"], provenance["dx"] = (
        params.provenance.get("dx"),
        params.provenance.get("dz"),
    )
    return replace(params, dz=params.dx, dx=params.dz, provenance=provenance)


def pad_to_length(params: AQCParams, n_target: int) -> AQCParams:
    """Append zero coordinates; l and both relative distances are unchanged."""

    if n_target < params.n:
        raise ShrinkNotAllowed(f"cannot pad length {params.n} down to {n_target}")
    if n_target == params.n:
        return params
    provenance = dict(params.provenance)
    provenance["n"] = "padded"
    return replace(params, n=n_target, provenance=provenance)


def threshold_gap_bound(q: int, n: int, ell: int) -> int:
    """Lower bound on r - t for ramp schemes over GF(q^2) with n shares.

    The best of the bounds indexed by m = 0..l-1, each evaluated exactly and
    rounded up.
    """

    if ell < 1:
        raise ValueError(f"l={ell} must be positive")
    best = Fraction(0)
    for m in range(ell):
        low = q ** (2 * m)
        high = q ** (2 * m + 2)
        value = Fraction((low - 1) * (n + 2) + (high - low) * (ell - 2 * m), high - 1)
        best = max(best, value)
    return math.ceil(best)
