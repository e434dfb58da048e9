#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Nested code pairs C2 < C1 with their relative distances."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Literal

from hermpair.core.errors import NotNested, ZeroCodimension

from .linear_code import LinearCode, dual, stacked_rank

Provenance = Literal["formula", "bruteforce"]


@dataclass(frozen=True)
class DistanceValue:
    value: int
    provenance: Provenance = "formula"

    def __int__(self):
        return self.value


@dataclass(frozen=True, eq=False)
class NestedPair:
    """Codes C2 < C1 of codimension l = dim C1 - dim C2 >= 1.

    `d_rel` is a value for d(C1, C2) and `d_rel_dual` one for d(C2^perp, C1^perp).
    `d_c1` and `d_c2_dual` hold the non-relative distances d(C1) and d(C2^perp)
    when known. Any of them may be None.
    """

    c1: LinearCode
    c2: LinearCode
    codimension: int
    d_rel: DistanceValue | None = None
    d_rel_dual: DistanceValue | None = None
    construction: str = ""
    d_c1: DistanceValue | None = None
    d_c2_dual: DistanceValue | None = None

    @property
    def q(self) -> int:
        return self.c1.q

    @property
    def n(self) -> int:
        return self.c1.n

    def dual(self) -> NestedPair:
        """The pair C1^perp < C2^perp; relative distances swap roles."""

        return NestedPair(
            c1=dual(self.c2),
            c2=dual(self.c1),
            codimension=self.codimension,
            d_rel=self.d_rel_dual,
            d_rel_dual=self.d_rel,
            construction=f"dual({self.construction})" if self.construction else "",
            d_c1=self.d_c2_dual,
            d_c2_dual=self.d_c1,
        )

    def with_distances(
        self,
        d_rel: DistanceValue | None = None,
        d_rel_dual: DistanceValue | None = None,
    ) -> NestedPair:
        return replace(
            self,
            d_rel=d_rel if d_rel is not None else self.d_rel,
            d_rel_dual=d_rel_dual if d_rel_dual is not None else self.d_rel_dual,
        )

    def __repr__(self):
        return (
            f"NestedPair({self.c1.descriptor.label} > {self.c2.descriptor.label}, "
            f"l={self.codimension})"
        )


def make_pair(
    c1: LinearCode,
    c2: LinearCode,
    *,
    d_rel: DistanceValue | None = None,
    d_rel_dual: DistanceValue | None = None,
    construction: str = "",
    d_c1: DistanceValue | None = None,
    d_c2_dual: DistanceValue | None = None,
) -> NestedPair:
    """Check C2 < C1 by rank([C1; C2]) = rank(C1) and build the pair."""

    if c1.n != c2.n or c1.GF is not c2.GF:
        raise NotNested(f"codes {c1!r} and {c2!r} live in different spaces")
    if stacked_rank(c1, c2) != c1.k:
        raise NotNested(
            f"{c2.descriptor.label} is not contained in {c1.descriptor.label}"
        )
    codimension = c1.k - c2.k
    if codimension < 1:
        raise ZeroCodimension(
            f"{c1.descriptor.label} and {c2.descriptor.label} span the same code"
        )
    return NestedPair(
        c1=c1,
        c2=c2,
        codimension=codimension,
        d_rel=d_rel,
        d_rel_dual=d_rel_dual,
        construction=construction,
        d_c1=d_c1,
        d_c2_dual=d_c2_dual,
    )
