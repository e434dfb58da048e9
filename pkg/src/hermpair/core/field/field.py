#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Exact arithmetic in GF(p^m) with a fixed Conway modulus.

Elements are identified by their index: the integer whose base-p digits are the
polynomial coefficients, lowest degree first. This is the integer representation
used by `galois`, so matrices of indices convert to `galois.FieldArray` without
any remapping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import galois
import numpy as np

from hermpair.core.errors import (
    DivisionByZero,
    FieldMismatch,
    NoBundledModulus,
    NotASquareOrder,
    NotPrime,
    OrderTooLarge,
)

MAX_FIELD_ORDER = 2**16


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """A finite field GF(p^m) with log/antilog tables for multiplication.

    `modulus` lists the coefficients of the monic Conway polynomial, lowest degree
    first. `GF` is the matching `galois` field class used by the vectorized code
    paths. Instances are cached per (p, m), so identity comparison is enough to
    detect mixed fields.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    order: int
    GF: type = field(repr=False)
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)

    @property
    def primitive(self) -> FieldElement:
        return FieldElement(self, int(self.exp_table[1]))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def is_square_order(self) -> bool:
        return self.m % 2 == 0

    @property
    def subfield_order(self) -> int:
        """Order q of the subfield GF(q) of a field of order q^2."""

        if not self.is_square_order:
            raise NotASquareOrder(f"GF({self.order}) is not a field of order q^2")
        return self.p ** (self.m // 2)

    def element(self, index: int) -> FieldElement:
        index = int(index)
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} is not an element of GF({self.order})")
        return FieldElement(self, index)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, index) for index in range(self.order)]

    def array(self, indices) -> galois.FieldArray:
        """Convert element indices (or nested lists of them) to a field array."""

        return self.GF(np.asarray(indices, dtype=np.int64))

    def __repr__(self):
        return f"FieldSpec(GF({self.p}^{self.m}))"


@dataclass(frozen=True, order=True)
class FieldElement:
    """An element of a `FieldSpec`, stored as its canonical index."""

    spec: FieldSpec = field(compare=False)
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.spec.order:
            raise ValueError(
                f"index {self.index} is not an element of GF({self.spec.order})"
            )

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec is other.spec and self.index == other.index

    def __hash__(self):
        return hash((self.spec.p, self.spec.m, self.index))

    def __int__(self):
        return self.index

    def __bool__(self):
        return self.index != 0

    def __repr__(self):
        return f"GF({self.spec.order})({self.index})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, neg(other))

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    def __truediv__(self, other):
        return mul(self, inv(other))

    def __pow__(self, exponent):
        return power(self, exponent)


def _is_prime(p: int) -> bool:
    return p >= 2 and galois.is_prime(p)


@lru_cache(maxsize=None)
def field_create(p: int, m: int) -> FieldSpec:
    """Build GF(p^m) with the Conway polynomial as modulus.

    Args:
        p: (int) characteristic, must be prime
        m: (int) extension degree

    Returns:
        FieldSpec for GF(p^m). Repeated calls return the same object.
    """

    if not _is_prime(p):
        raise NotPrime(f"{p} is not a prime")
    if m < 1:
        raise ValueError(f"extension degree must be positive, got {m}")
    order = p**m
    if order > MAX_FIELD_ORDER:
        raise OrderTooLarge(f"GF({p}^{m}) has order {order} > {MAX_FIELD_ORDER}")

    try:
        conway = galois.conway_poly(p, m)
    except LookupError as exc:
        raise NoBundledModulus(f"no Conway polynomial for GF({p}^{m})") from exc
    if not conway.is_irreducible():
        raise NoBundledModulus(f"modulus {conway} of GF({p}^{m}) is reducible")

    GF = galois.GF(p, m, irreducible_poly=conway)
    modulus = tuple(int(c) for c in reversed(conway.coeffs))

    # exp_table[k] = alpha^k for k in [0, order-1); doubled so that the sum of two
    # logarithms never needs a modulo.
    powers = GF.primitive_element ** np.arange(order - 1)
    exp_table = np.concatenate([np.asarray(powers, dtype=np.int64)] * 2)
    log_table = np.zeros(order, dtype=np.int64)
    log_table[exp_table[: order - 1]] = np.arange(order - 1)
    exp_table.setflags(write=False)
    log_table.setflags(write=False)

    return FieldSpec(
        p=p,
        m=m,
        modulus=modulus,
        order=order,
        GF=GF,
        exp_table=exp_table,
        log_table=log_table,
    )


def field_for_q(q: int) -> FieldSpec:
    """Return GF(q^2) for a prime power q."""

    if q < 2 or not galois.is_prime_power(q):
        raise NotPrime(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return field_create(int(primes[0]), 2 * int(exponents[0]))


def _check_same_field(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec is not b.spec:
        raise FieldMismatch(f"cannot combine elements of {a.spec} and {b.spec}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    gf = _check_same_field(a, b)
    return FieldElement(gf, int(gf.GF(a.index) + gf.GF(b.index)))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, int(-a.spec.GF(a.index)))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    gf = _check_same_field(a, b)
    if a.index == 0 or b.index == 0:
        return gf.zero
    k = gf.log_table[a.index] + gf.log_table[b.index]
    return FieldElement(gf, int(gf.exp_table[k]))


def inv(a: FieldElement) -> FieldElement:
    gf = a.spec
    if a.index == 0:
        raise DivisionByZero(f"zero has no inverse in GF({gf.order})")
    k = (gf.order - 1 - gf.log_table[a.index]) % (gf.order - 1)
    return FieldElement(gf, int(gf.exp_table[k]))


def power(a: FieldElement, exponent: int) -> FieldElement:
    gf = a.spec
    exponent = int(exponent)
    if a.index == 0:
        if exponent < 0:
            raise DivisionByZero(f"zero has no inverse in GF({gf.order})")
        return gf.one if exponent == 0 else gf.zero
    k = (gf.log_table[a.index] * exponent) % (gf.order - 1)
    return FieldElement(gf, int(gf.exp_table[k]))


def norm_to_subfield(a: FieldElement) -> FieldElement:
    """Norm a^(q+1) of an element of GF(q^2); the result lies in GF(q)."""

    q = a.spec.subfield_order
    result = power(a, q + 1)
    if power(result, q) != result:
        raise ArithmeticError(f"norm of {a} left the subfield GF({q})")
    return result


def trace_to_subfield(a: FieldElement) -> FieldElement:
    """Trace a^q + a of an element of GF(q^2); the result lies in GF(q)."""

    q = a.spec.subfield_order
    result = add(power(a, q), a)
    if power(result, q) != result:
        raise ArithmeticError(f"trace of {a} left the subfield GF({q})")
    return result


def in_subfield(a: FieldElement) -> bool:
    """True when a^q = a, i.e. a lies in the subfield GF(q) of GF(q^2)."""

    return power(a, a.spec.subfield_order) == a
