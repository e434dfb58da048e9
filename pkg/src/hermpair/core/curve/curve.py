#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Rational places of the Hermitian curve x^(q+1) = y^q + y over GF(q^2)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import galois
import numpy as np

from hermpair.core.field import FieldSpec, field_for_q
from hermpair.core.semigroup import check_q, decompose, genus


@dataclass(frozen=True, eq=False)
class CurveContext:
    """The q^3 affine rational places P_1..P_n in a fixed evaluation order.

    Places are stored as element indices and sorted by (x index, y index). The
    place at infinity Q is implicit.
    """

    q: int
    field: FieldSpec
    places: tuple[tuple[int, int], ...]
    genus: int
    n: int
    xs: galois.FieldArray = field(repr=False)
    ys: galois.FieldArray = field(repr=False)

    def __repr__(self):
        return f"CurveContext(q={self.q}, n={self.n}, g={self.genus})"


@dataclass(frozen=True, order=True)
class MonomialFunction:
    """The function x^a y^b, whose pole order at Q is a*q + b*(q+1)."""

    pole_order: int
    a: int
    b: int


@lru_cache(maxsize=None)
def curve_create(q: int) -> CurveContext:
    """Enumerate the affine rational places of the Hermitian curve.

    Args:
        q: (int) supported prime power; the curve is defined over GF(q^2)

    Returns:
        CurveContext with n = q^3 places and genus q(q-1)/2
    """

    check_q(q)
    gf = field_for_q(q)
    elements = gf.GF.elements
    norms = (elements ** (q + 1)).view(np.ndarray)
    traces = (elements**q + elements).view(np.ndarray)
    x_idx, y_idx = np.nonzero(norms[:, np.newaxis] == traces[np.newaxis, :])
    places = tuple(zip(x_idx.tolist(), y_idx.tolist()))
    if len(places) != q**3:
        raise ArithmeticError(
            f"found {len(places)} places on the Hermitian curve for q={q}, "
            f"expected {q**3}"
        )
    xs = gf.array(x_idx)
    ys = gf.array(y_idx)
    return CurveContext(
        q=q,
        field=gf,
        places=places,
        genus=genus(q),
        n=q**3,
        xs=xs,
        ys=ys,
    )


def monomial_for(ctx: CurveContext, lam: int) -> MonomialFunction:
    """The monomial x^a y^b with pole order lam in H*(Q)."""

    a, b = decompose(ctx.q, lam)
    return MonomialFunction(pole_order=int(lam), a=a, b=b)


def evaluate(ctx: CurveContext, f: MonomialFunction) -> galois.FieldArray:
    """Evaluation vector (f(P_1), ..., f(P_n)) in place order."""

    if not (0 <= f.a <= ctx.q**2 - 1 and 0 <= f.b <= ctx.q - 1):
        raise ValueError(f"{f} is not a basis monomial for q={ctx.q}")
    values = ctx.field.GF.Ones(ctx.n)
    if f.a:
        values = values * ctx.xs**f.a
    if f.b:
        values = values * ctx.ys**f.b
    return values


def evaluation_matrix(ctx: CurveContext, lambdas) -> galois.FieldArray:
    """Stack the evaluation vectors of the monomials with the given pole orders."""

    lambdas = list(lambdas)
    if not lambdas:
        return ctx.field.GF.Zeros((0, ctx.n))
    rows = [evaluate(ctx, monomial_for(ctx, lam)).view(np.ndarray) for lam in lambdas]
    return ctx.field.GF(np.vstack(rows))
