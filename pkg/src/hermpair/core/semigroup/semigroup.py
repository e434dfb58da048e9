#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""The Weierstrass semigroup H(Q) = <q, q+1> of the Hermitian curve.

Every pole order in H*(Q) is written as lambda = i*q + j*(q+1) with
0 <= i <= q^2-1 and 0 <= j <= q-1. The order-bound functions sigma and mu are
available both as closed formulas and as literal counts over the semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from hermpair.core.errors import NotInHStar, UnsupportedQ

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def check_q(q: int) -> int:
    """Return q if the Hermitian curve over GF(q^2) is supported."""

    if q not in SUPPORTED_Q:
        raise UnsupportedQ(
            f"q={q} is not supported; choose one of {', '.join(map(str, SUPPORTED_Q))}"
        )
    return q


def genus(q: int) -> int:
    return q * (q - 1) // 2


def code_length(q: int) -> int:
    return q**3


@dataclass(frozen=True, order=True)
class SemigroupElement:
    """An element lambda of H*(Q) with its (i, j) coordinates and order bounds."""

    lam: int
    i: int
    j: int
    sigma: int
    mu: int


def h_of_q_contains(q: int, x: int) -> bool:
    """True iff x = u*q + v*(q+1) for some u, v >= 0."""

    if x < 0:
        return False
    c, r = divmod(x, q)
    return c >= r


def _h_of_q_mask(q: int, values: np.ndarray) -> np.ndarray:
    c, r = np.divmod(values, q)
    return (values >= 0) & (c >= r)


def decompose(q: int, lam: int) -> tuple[int, int]:
    """Return (i, j) with lam = i*q + j*(q+1), or raise `NotInHStar`."""

    check_q(q)
    lam = int(lam)
    j = lam % q
    i, rest = divmod(lam - j * (q + 1), q)
    if lam < 0 or rest != 0 or not 0 <= i <= q * q - 1:
        raise NotInHStar(f"{lam} is not an element of H*(Q) for q={q}")
    return i, j


def compose(q: int, i: int, j: int) -> int:
    """Return i*q + j*(q+1) after checking the index ranges of H*(Q)."""

    if not (0 <= i <= q * q - 1 and 0 <= j <= q - 1):
        raise NotInHStar(f"(i, j)=({i}, {j}) is outside H*(Q) for q={q}")
    return i * q + j * (q + 1)


def mirror(q: int, lam: int) -> int:
    """The involution iq + j(q+1) -> (q^2-1-i)q + (q-1-j)(q+1) on H*(Q)."""

    i, j = decompose(q, lam)
    return compose(q, q * q - 1 - i, q - 1 - j)


def sigma_formula(q: int, lam: int) -> int:
    i, j = decompose(q, lam)
    if i < q * q - q:
        return q**3 - int(lam)
    return (q * q - i) * (q - j)


def mu_formula(q: int, lam: int) -> int:
    return sigma_formula(q, mirror(q, lam))


def sigma_oracle(q: int, lam: int) -> int:
    """Count eta in H*(Q) with eta - lam in H(Q)."""

    decompose(q, lam)
    values = np.asarray(h_star_values(q), dtype=np.int64)
    return int(np.count_nonzero(_h_of_q_mask(q, values - int(lam))))


def mu_oracle(q: int, lam: int) -> int:
    """Count eta in H(Q) with lam - eta in H(Q)."""

    if lam < 0:
        return 0
    eta = np.arange(int(lam) + 1, dtype=np.int64)
    both = _h_of_q_mask(q, eta) & _h_of_q_mask(q, int(lam) - eta)
    return int(np.count_nonzero(both))


@lru_cache(maxsize=None)
def h_star(q: int) -> tuple[SemigroupElement, ...]:
    """All q^3 elements of H*(Q) in increasing order, with sigma and mu."""

    check_q(q)
    elements = []
    for i in range(q * q):
        for j in range(q):
            lam = i * q + j * (q + 1)
            elements.append(
                SemigroupElement(
                    lam=lam,
                    i=i,
                    j=j,
                    sigma=sigma_formula(q, lam),
                    mu=mu_formula(q, lam),
                )
            )
    return tuple(sorted(elements))


@lru_cache(maxsize=None)
def h_star_values(q: int) -> tuple[int, ...]:
    return tuple(element.lam for element in h_star(q))


def h_star_element(q: int, lam: int) -> SemigroupElement:
    decompose(q, lam)
    return h_star(q)[h_star_values(q).index(int(lam))]


def gaps(q: int) -> list[int]:
    """The gaps of H(Q); there are exactly g of them."""

    largest = 2 * genus(q)
    return [x for x in range(largest) if not h_of_q_contains(q, x)]


@lru_cache(maxsize=None)
def achievable_deltas(q: int) -> tuple[int, ...]:
    """Sorted designed distances, i.e. the image of sigma on H*(Q)."""

    return tuple(sorted({element.sigma for element in h_star(q)}))


def round_up_delta(q: int, delta: int) -> int:
    """Smallest achievable designed distance that is at least delta."""

    for value in achievable_deltas(q):
        if value >= delta:
            return value
    raise ValueError(f"no designed distance >= {delta} exists for q={q}")
