#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Coset ramp secret sharing from a nested code pair.

The dealer fixes a basis b_1..b_k2 of C2 and rows b_{k2+1}..b_{k2+l} extending
it to a basis of C1. A secret s is shared as a_1 b_1 + ... + a_k2 b_k2 +
s_1 b_{k2+1} + ... + s_l b_{k2+l} with uniformly drawn a_i; participant i
receives coordinate i (1-based).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
import hashlib
import secrets
from typing import Literal

import galois
import numpy as np

from hermpair.core.codes import NestedPair, extension_basis, format_matrix
from hermpair.core.codes.linear_code import rank
from hermpair.core.context import get_seed
from hermpair.core.errors import InconsistentShares, LengthMismatch

Randomness = Literal["seeded", "system"]


@dataclass(frozen=True, eq=False)
class DealerSpec:
    """A nested pair together with the coset basis used for dealing."""

    pair: NestedPair
    extension: galois.FieldArray = field(repr=False)
    randomness: Randomness = "seeded"

    def __post_init__(self):
        if self.randomness not in ("seeded", "system"):
            raise ValueError(f'Unknown randomness mode "{self.randomness}"')
        if self.extension.shape != (self.ell, self.n):
            raise LengthMismatch(
                f"extension has shape {self.extension.shape}, "
                f"expected ({self.ell}, {self.n})"
            )
        if rank(self.basis) != self.k2 + self.ell:
            raise ValueError("extension rows do not complete a basis of C1")

    @property
    def n(self) -> int:
        return self.pair.n

    @property
    def ell(self) -> int:
        return self.pair.codimension

    @property
    def k2(self) -> int:
        return self.pair.c2.k

    @property
    def GF(self) -> type:
        return self.pair.c1.GF

    @cached_property
    def basis(self) -> galois.FieldArray:
        """C2 basis rows followed by the extension rows."""

        return self.GF(
            np.vstack(
                [
                    self.pair.c2.generator.view(np.ndarray),
                    self.extension.view(np.ndarray),
                ]
            )
        )

    @cached_property
    def scheme_id(self) -> str:
        digest = hashlib.sha256()
        digest.update(format_matrix(self.pair.c1).encode())
        digest.update(format_matrix(self.pair.c2).encode())
        for row in self.extension.view(np.ndarray):
            digest.update(" ".join(str(int(x)) for x in row).encode())
        return digest.hexdigest()[:16]


def dealer_spec(pair: NestedPair, randomness: Randomness = "seeded") -> DealerSpec:
    """Extend C2's basis with rows of C1 taken in pole order."""

    return DealerSpec(
        pair=pair, extension=extension_basis(pair.c1, pair.c2), randomness=randomness
    )


@dataclass(frozen=True)
class ShareBundle:
    """Shares keyed by participant index 1..n, values as field element indices."""

    shares: dict[int, int]
    scheme_id: str = ""

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.shares))

    def subset(self, indices) -> ShareBundle:
        missing = [i for i in indices if i not in self.shares]
        if missing:
            raise KeyError(f"participants {missing} hold no share in this bundle")
        return ShareBundle({i: self.shares[i] for i in indices}, self.scheme_id)

    def __len__(self):
        return len(self.shares)


@dataclass(frozen=True)
class Undetermined:
    """Reconstruction result when the known shares leave secret symbols free.

    `free` lists the 0-based secret coordinates that are not determined and
    `determined` maps the remaining coordinates to their values.
    """

    free: tuple[int, ...]
    determined: dict[int, int]


def _as_indices(values, GF, length: int, what: str) -> np.ndarray:
    values = np.asarray([int(v) for v in values], dtype=np.int64)
    if values.shape != (length,):
        raise LengthMismatch(f"{what} has length {values.shape[0]}, expected {length}")
    if np.any((values < 0) | (values >= GF.order)):
        raise ValueError(f"{what} entries must be field indices below {GF.order}")
    return values


def draw_coefficients(spec: DealerSpec, seed: int | None = None) -> np.ndarray:
    """Uniform coefficients a_1..a_k2 from the scheme's randomness source."""

    order = spec.GF.order
    if spec.randomness == "system":
        return np.array([secrets.randbelow(order) for _ in range(spec.k2)], dtype=np.int64)
    rng = np.random.default_rng(get_seed(seed))
    return rng.integers(0, order, size=spec.k2, dtype=np.int64)


def deal(
    spec: DealerSpec,
    secret,
    seed: int | None = None,
    *,
    coefficients=None,
) -> ShareBundle:
    """Share `secret` (l element indices) among all n participants.

    Args:
        spec: (DealerSpec) scheme to deal with
        secret: sequence of l field element indices or FieldElements
        seed: (int) seed for the "seeded" randomness mode
        coefficients: explicit a_1..a_k2, bypassing the randomness source

    Returns:
        ShareBundle holding all n shares
    """

    GF = spec.GF
    secret = _as_indices(secret, GF, spec.ell, "secret")
    if coefficients is None:
        coefficients = draw_coefficients(spec, seed)
    coefficients = _as_indices(coefficients, GF, spec.k2, "coefficients")
    message = GF(np.concatenate([coefficients, secret]))
    word = (message @ spec.basis).view(np.ndarray)
    return ShareBundle(
        {i + 1: int(x) for i, x in enumerate(word)}, scheme_id=spec.scheme_id
    )


def _columns(spec: DealerSpec, indices) -> tuple[galois.FieldArray, np.ndarray]:
    positions = np.asarray([i - 1 for i in indices], dtype=np.int64)
    if np.any((positions < 0) | (positions >= spec.n)):
        raise ValueError(f"participant indices must lie in 1..{spec.n}")
    if len(set(positions.tolist())) != len(positions):
        raise ValueError("participant indices must be distinct")
    return spec.basis[:, positions], positions


def reconstruct(spec: DealerSpec, partial: ShareBundle) -> tuple[int, ...] | Undetermined:
    """Recover the secret from the shares in `partial`.

    The message x = (a, s) solves x B_A = c_A for the basis restricted to the
    known coordinates A. Secret symbol s_i is determined exactly when the unit
    vector of its message coordinate lies in the column space of B_A.

    Raises:
        InconsistentShares: the known shares are not a projection of a C1 word
    """

    if partial.scheme_id and partial.scheme_id != spec.scheme_id:
        raise InconsistentShares(
            f"shares belong to scheme {partial.scheme_id}, not {spec.scheme_id}"
        )
    GF = spec.GF
    indices = partial.indices
    values = _as_indices([partial.shares[i] for i in indices], GF, len(indices), "shares")
    restricted, _ = _columns(spec, indices)
    k1 = spec.k2 + spec.ell
    if len(indices) == 0:
        return Undetermined(free=tuple(range(spec.ell)), determined={})

    system = GF(np.hstack([restricted.T.view(np.ndarray), values[:, np.newaxis]]))
    reduced = system.row_reduce().view(np.ndarray)
    solution = np.zeros(k1, dtype=np.int64)
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            continue
        pivot = int(nonzero[0])
        if pivot == k1:
            raise InconsistentShares(
                f"shares on {len(indices)} positions are not consistent with C1"
            )
        solution[pivot] = row[k1]

    base_rank = rank(restricted)
    free, determined = [], {}
    for offset in range(spec.ell):
        unit = GF.Zeros((k1, 1))
        unit[spec.k2 + offset, 0] = 1
        augmented = GF(np.hstack([restricted.view(np.ndarray), unit.view(np.ndarray)]))
        if rank(augmented) == base_rank:
            determined[offset] = int(solution[spec.k2 + offset])
        else:
            free.append(offset)
    if free:
        return Undetermined(free=tuple(free), determined=determined)
    return tuple(determined[i] for i in range(spec.ell))
