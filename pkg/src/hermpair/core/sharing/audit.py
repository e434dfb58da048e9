#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Exact privacy and reconstruction numbers by subset rank analysis.

For an index set A let gain(A) = rank(B_A) - rank(G2_A), where B is the full
dealing basis and G2 the C2 rows. The shares on A reveal nothing about the
secret iff gain(A) = 0 and determine it iff gain(A) = l. gain is monotone in A,
so t is one less than the smallest size with a leaking set and r is one more
than the largest size with an undetermined set.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from hermpair.core.codes.linear_code import rank
from hermpair.core.context import get_budget, get_workers
from hermpair.core.errors import BudgetExceeded

from .scheme import DealerSpec


def information_gain(spec: DealerSpec, indices) -> int:
    """rank(B_A) - rank(G2_A) for 1-based participant indices A."""

    positions = [i - 1 for i in indices]
    if not positions:
        return 0
    full = rank(spec.basis[:, positions])
    if spec.k2 == 0:
        return full
    return full - rank(spec.pair.c2.generator[:, positions])


class _SubsetScan:
    """Size-by-size subset enumeration sharing one budget."""

    def __init__(self, spec: DealerSpec, budget: int | None, workers: int | None):
        self.spec = spec
        self.budget = get_budget(budget)
        self.workers = get_workers(workers)
        self.visited = 0

    def find(self, size: int, predicate):
        """First size-`size` subset (1-based) whose gain satisfies `predicate`."""

        required = self.visited + comb(self.spec.n, size)
        if required > self.budget:
            raise BudgetExceeded(required, self.budget, "subset audit")
        subsets = combinations(range(1, self.spec.n + 1), size)
        if self.workers == 1:
            for subset in subsets:
                self.visited += 1
                if predicate(information_gain(self.spec, subset)):
                    return subset
            return None
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            subsets = list(subsets)
            gains = pool.map(lambda s: information_gain(self.spec, s), subsets)
            for subset, gain in zip(subsets, gains):
                self.visited += 1
                if predicate(gain):
                    return subset
        return None


def exact_privacy_number(
    spec: DealerSpec, budget: int | None = None, *, workers: int | None = None
) -> int:
    """Largest T such that no set of T shares carries information on the secret."""

    scan = _SubsetScan(spec, budget, workers)
    for size in range(1, spec.n + 1):
        if scan.find(size, lambda gain: gain > 0) is not None:
            return size - 1
    return spec.n


def exact_reconstruction_number(
    spec: DealerSpec, budget: int | None = None, *, workers: int | None = None
) -> int:
    """Smallest R such that every set of R shares determines the secret."""

    scan = _SubsetScan(spec, budget, workers)
    for size in range(spec.n - 1, -1, -1):
        if scan.find(size, lambda gain: gain < spec.ell) is not None:
            return size + 1
    return 0


@dataclass(frozen=True)
class PrivacyCheck:
    size: int
    subsets: int
    passed: bool
    counterexample: tuple[int, ...] | None = None


def _all_messages(order: int, length: int) -> np.ndarray:
    indices = np.arange(order**length, dtype=np.int64)
    powers = order ** np.arange(length, dtype=np.int64)
    return (indices[:, np.newaxis] // powers[np.newaxis, :]) % order


def _share_multiset(randomness, secret_part) -> np.ndarray:
    tuples = (randomness + secret_part).view(np.ndarray)
    if tuples.shape[1] == 0:
        return tuples
    order = np.lexsort(tuples.T[::-1])
    return tuples[order]


def perfect_privacy_check(
    spec: DealerSpec, size: int, budget: int | None = None
) -> PrivacyCheck:
    """Compare share distributions on every size-`size` set across all secrets.

    For each set A and each secret, the share tuples on A are collected while
    the coefficients a range over all of GF^k2; the check passes when these
    multisets coincide for every secret.
    """

    GF = spec.GF
    order = GF.order
    subsets = comb(spec.n, size)
    required = order**spec.k2 * order**spec.ell * subsets
    budget = get_budget(budget)
    if required > budget:
        raise BudgetExceeded(required, budget, "privacy check")

    coefficients = GF(_all_messages(order, spec.k2))
    secret_values = GF(_all_messages(order, spec.ell))
    c2_rows = spec.basis[: spec.k2]
    extension = spec.basis[spec.k2 :]
    for subset in combinations(range(spec.n), size):
        columns = list(subset)
        randomness = coefficients @ c2_rows[:, columns] if spec.k2 else GF.Zeros((1, size))
        reference = None
        for secret in secret_values:
            secret_part = secret[np.newaxis, :] @ extension[:, columns]
            multiset = _share_multiset(randomness, secret_part)
            if reference is None:
                reference = multiset
            elif not np.array_equal(reference, multiset):
                return PrivacyCheck(
                    size=size,
                    subsets=subsets,
                    passed=False,
                    counterexample=tuple(i + 1 for i in subset),
                )
    return PrivacyCheck(size=size, subsets=subsets, passed=True)
