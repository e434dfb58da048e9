#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Linear codes over GF(q^2) built from Hermitian monomial evaluations.

Every `LinearCode` stores its generator matrix in reduced row echelon form, so
two codes have the same row space exactly when their generators are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
import re

import galois
import numpy as np

from hermpair.core.curve import CurveContext, evaluation_matrix
from hermpair.core.errors import DeltaOutOfRange
from hermpair.core.semigroup import h_star


@dataclass(frozen=True)
class OnePoint:
    lam: int

    @property
    def label(self) -> str:
        return f"onepoint:{self.lam}"


@dataclass(frozen=True)
class ImprovedPrimary:
    delta: int

    @property
    def label(self) -> str:
        return f"improved:{self.delta}"


@dataclass(frozen=True)
class ImprovedDualPerpSpan:
    delta: int

    @property
    def label(self) -> str:
        return f"dualperp:{self.delta}"


@dataclass(frozen=True)
class DualOf:
    inner: "Descriptor"

    @property
    def label(self) -> str:
        return f"dual({self.inner.label})"


@dataclass(frozen=True)
class Raw:
    @property
    def label(self) -> str:
        return "raw"


Descriptor = OnePoint | ImprovedPrimary | ImprovedDualPerpSpan | DualOf | Raw

_SIMPLE_DESCRIPTORS = {
    "onepoint": OnePoint,
    "improved": ImprovedPrimary,
    "dualperp": ImprovedDualPerpSpan,
}


def parse_descriptor(label: str) -> Descriptor:
    """Inverse of `Descriptor.label`."""

    if label == "raw":
        return Raw()
    match = re.fullmatch(r"dual\((.*)\)", label)
    if match:
        return DualOf(parse_descriptor(match.group(1)))
    match = re.fullmatch(r"(onepoint|improved|dualperp):(-?\d+)", label)
    if match:
        return _SIMPLE_DESCRIPTORS[match.group(1)](int(match.group(2)))
    raise ValueError(f'Unknown code descriptor "{label}"')


def rank(matrix: galois.FieldArray) -> int:
    """Rank over the field of the matrix entries (0 for empty matrices)."""

    if matrix.ndim != 2 or 0 in matrix.shape:
        return 0
    return int(np.linalg.matrix_rank(matrix))


def canonical_rows(GF: type, rows, n: int) -> galois.FieldArray:
    """Reduced row echelon basis of the row space of `rows`."""

    rows = GF(np.asarray(rows, dtype=np.int64).reshape(-1, n))
    if rows.shape[0] == 0:
        return GF.Zeros((0, n))
    reduced = rows.row_reduce()
    nonzero = np.any(reduced.view(np.ndarray) != 0, axis=1)
    return reduced[nonzero]


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A linear code of length n = q^3 given by a canonical generator matrix.

    `pole_orders` lists the monomials whose evaluations span the code, when the
    code was built from monomials; it fixes the order in which coset extensions
    are chosen.
    """

    ctx: CurveContext
    generator: galois.FieldArray = field(repr=False)
    descriptor: Descriptor = Raw()
    pole_orders: tuple[int, ...] | None = field(default=None, repr=False)

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def GF(self) -> type:
        return self.ctx.field.GF

    @cached_property
    def parity_check(self) -> galois.FieldArray:
        """Canonical generator of the dual code (rows h with G h^T = 0)."""

        if self.k == 0:
            return self.GF.Identity(self.n)
        if self.k == self.n:
            return self.GF.Zeros((0, self.n))
        return canonical_rows(self.GF, self.generator.null_space(), self.n)

    @cached_property
    def spanning_rows(self) -> galois.FieldArray:
        """Monomial evaluation rows when known, the canonical basis otherwise."""

        if self.pole_orders is None:
            return self.generator
        return evaluation_matrix(self.ctx, self.pole_orders)

    def contains(self, words) -> np.ndarray:
        """Membership test for each row of `words` via the parity checks."""

        words = self.GF(np.atleast_2d(np.asarray(words, dtype=np.int64)))
        checks = self.parity_check
        if checks.shape[0] == 0:
            return np.ones(words.shape[0], dtype=bool)
        syndromes = (words @ checks.T).view(np.ndarray)
        return ~np.any(syndromes != 0, axis=1)

    def row_space_equals(self, other: LinearCode) -> bool:
        return self.generator.shape == other.generator.shape and bool(
            np.array_equal(self.generator.view(np.ndarray), other.generator.view(np.ndarray))
        )

    def is_subcode_of(self, other: LinearCode) -> bool:
        if self.k == 0:
            return True
        return bool(np.all(other.contains(self.generator)))

    def __repr__(self):
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k}, {self.descriptor.label})"


def code_from_rows(
    ctx: CurveContext,
    rows,
    descriptor: Descriptor | None = None,
    pole_orders: tuple[int, ...] | None = None,
) -> LinearCode:
    """Canonicalize the row space of `rows` into a `LinearCode`."""

    generator = canonical_rows(ctx.field.GF, rows, ctx.n)
    return LinearCode(
        ctx=ctx,
        generator=generator,
        descriptor=descriptor if descriptor is not None else Raw(),
        pole_orders=pole_orders,
    )


def _monomial_code(ctx: CurveContext, pole_orders, descriptor) -> LinearCode:
    pole_orders = tuple(sorted(pole_orders))
    rows = evaluation_matrix(ctx, pole_orders)
    return code_from_rows(ctx, rows, descriptor, pole_orders)


def onepoint_code(ctx: CurveContext, lam: int) -> LinearCode:
    """C_L(D, lam Q): monomials with pole order at most lam.

    A negative lam gives the zero code.
    """

    pole_orders = [e.lam for e in h_star(ctx.q) if e.lam <= lam]
    return _monomial_code(ctx, pole_orders, OnePoint(int(lam)))


def improved_primary(ctx: CurveContext, delta: int) -> LinearCode:
    """The improved code E~(delta): monomials with sigma >= delta."""

    if not 1 <= delta <= ctx.n:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {ctx.n}]")
    pole_orders = [e.lam for e in h_star(ctx.q) if e.sigma >= delta]
    return _monomial_code(ctx, pole_orders, ImprovedPrimary(int(delta)))


def improved_dual_perp(ctx: CurveContext, delta: int) -> LinearCode:
    """The span of monomials with mu < delta, whose dual is C~(delta)."""

    if not 1 <= delta <= ctx.n + 1:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {ctx.n + 1}]")
    pole_orders = [e.lam for e in h_star(ctx.q) if e.mu < delta]
    return _monomial_code(ctx, pole_orders, ImprovedDualPerpSpan(int(delta)))


def dual(code: LinearCode) -> LinearCode:
    """Dual code under the standard inner product."""

    descriptor = (
        code.descriptor.inner
        if isinstance(code.descriptor, DualOf)
        else DualOf(code.descriptor)
    )
    return LinearCode(
        ctx=code.ctx,
        generator=code.parity_check,
        descriptor=descriptor,
    )


def stacked_rank(*codes: LinearCode) -> int:
    """Rank of the vertical stack of several generator matrices."""

    blocks = [code.generator.view(np.ndarray) for code in codes if code.k]
    if not blocks:
        return 0
    return rank(codes[0].GF(np.vstack(blocks)))


def extension_basis(c1: LinearCode, c2: LinearCode) -> galois.FieldArray:
    """Rows of C1 that extend a basis of C2 to a basis of C1.

    Candidates are taken from C1's spanning rows in order (pole order for monomial
    codes), keeping each row that raises the rank.
    """

    GF = c1.GF
    chosen = []
    basis = c2.generator.view(np.ndarray)
    current = c2.k
    for row in c1.spanning_rows:
        if current == c1.k:
            break
        trial = np.vstack([basis, row.view(np.ndarray)[np.newaxis, :]])
        trial_rank = rank(GF(trial))
        if trial_rank > current:
            basis = trial
            current = trial_rank
            chosen.append(row.view(np.ndarray))
    if not chosen:
        return GF.Zeros((0, c1.n))
    return GF(np.vstack(chosen))
