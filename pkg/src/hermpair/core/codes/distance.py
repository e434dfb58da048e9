#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Exhaustive minimum and relative minimum distances.

Codewords are enumerated projectively: for a basis b_1..b_k every nonzero
codeword is a scalar multiple of exactly one word b_p + sum_{i>p} c_i b_i, so
only (Q^k - 1)/(Q - 1) words are visited for a code of dimension k over GF(Q).
Message coefficients are expanded into base-Q digits in chunks and multiplied
through the generator with `galois`; weights are counted with numpy.

For the zero code the distance is reported as n + 1 so that it behaves as
"infinite" in threshold comparisons.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import threading

import galois
import numpy as np

from hermpair.core.context import get_budget, get_workers
from hermpair.core.errors import BudgetExceeded

from .linear_code import LinearCode, extension_basis

CHUNK_SIZE = 1 << 14


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a distance enumeration."""

    value: int
    exhaustive: bool
    visited: int
    required: int

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exhaustive": self.exhaustive,
            "visited": self.visited,
            "required": self.required,
        }


def required_work(field_order: int, k: int) -> int:
    """Message-space size Q^k checked against the enumeration budget."""

    return int(field_order) ** int(k)


def _check_budget(field_order: int, k: int, budget: int | None, what: str) -> int:
    required = required_work(field_order, k)
    budget = get_budget(budget)
    if required > budget:
        raise BudgetExceeded(required, budget, what)
    return required


def _tasks(fixed_rows, free_blocks, field_order, chunk_size):
    """Yield (fixed_row, free_rows, start, stop) chunks of the affine searches."""

    for fixed, free in zip(fixed_rows, free_blocks):
        total = field_order ** free.shape[0]
        for start in range(0, total, chunk_size):
            yield fixed, free, start, min(start + chunk_size, total)


def _chunk_min_weight(GF, fixed, free, start, stop) -> tuple[int, int]:
    """Minimum weight of fixed + c @ free for message indices in [start, stop)."""

    length = free.shape[0]
    if length == 0:
        return int(np.count_nonzero(fixed.view(np.ndarray))), 1
    order = GF.order
    indices = np.arange(start, stop, dtype=np.int64)
    powers = order ** np.arange(length, dtype=np.int64)
    digits = (indices[:, np.newaxis] // powers[np.newaxis, :]) % order
    words = GF(digits) @ free + fixed
    weights = np.count_nonzero(words.view(np.ndarray), axis=1)
    return int(weights.min()), len(indices)


def _search(
    GF,
    n: int,
    fixed_rows,
    free_blocks,
    required: int,
    stop_at: int | None,
    workers: int,
) -> DistanceResult:
    stop = threading.Event()

    def run(task):
        if stop.is_set():
            return None
        weight, count = _chunk_min_weight(GF, *task)
        if stop_at is not None and weight <= stop_at:
            stop.set()
        return weight, count

    tasks = _tasks(fixed_rows, free_blocks, GF.order, CHUNK_SIZE)
    best = n + 1
    visited = 0
    if workers == 1:
        for task in tasks:
            weight, count = run(task)
            best = min(best, weight)
            visited += count
            if stop.is_set():
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for outcome in pool.map(run, tasks):
                if outcome is None:
                    continue
                best = min(best, outcome[0])
                visited += outcome[1]
    return DistanceResult(
        value=best, exhaustive=not stop.is_set(), visited=visited, required=required
    )


def _projective_blocks(basis: galois.FieldArray, tail: galois.FieldArray | None = None):
    """Split a basis into (pivot row, remaining rows [+ tail]) pairs."""

    fixed_rows, free_blocks = [], []
    for p in range(basis.shape[0]):
        free = basis[p + 1 :]
        if tail is not None and tail.shape[0]:
            free = type(basis)(np.vstack([free.view(np.ndarray), tail.view(np.ndarray)]))
        fixed_rows.append(basis[p])
        free_blocks.append(free)
    return fixed_rows, free_blocks


def min_distance_result(
    code: LinearCode,
    budget: int | None = None,
    *,
    stop_at: int | None = None,
    workers: int | None = None,
) -> DistanceResult:
    """Minimum Hamming weight over the nonzero codewords of `code`.

    Args:
        code: (LinearCode) code to analyze
        budget: (int) maximum message-space size Q^k; falls back to the run context
        stop_at: (int) certified lower bound; the search stops once a word of this
            weight or less is found
        workers: (int) number of enumeration threads
    """

    required = _check_budget(code.ctx.field.order, code.k, budget, "min_distance")
    if code.k == 0:
        return DistanceResult(value=code.n + 1, exhaustive=True, visited=0, required=1)
    fixed_rows, free_blocks = _projective_blocks(code.generator)
    return _search(
        code.GF,
        code.n,
        fixed_rows,
        free_blocks,
        required,
        stop_at,
        get_workers(workers),
    )


def min_distance(
    code: LinearCode,
    budget: int | None = None,
    *,
    stop_at: int | None = None,
    workers: int | None = None,
) -> int:
    return min_distance_result(code, budget, stop_at=stop_at, workers=workers).value


def relative_distance_result(
    pair,
    budget: int | None = None,
    *,
    stop_at: int | None = None,
    workers: int | None = None,
) -> DistanceResult:
    """Minimum weight over C1 minus C2 for a nested pair.

    Words of C1 outside C2 are exactly e @ E + c with E an extension of a C2 basis
    to a C1 basis, e nonzero and c in C2; e is enumerated projectively.
    """

    c1, c2 = pair.c1, pair.c2
    required = _check_budget(c1.ctx.field.order, c1.k, budget, "relative_distance")
    extension = extension_basis(c1, c2)
    fixed_rows, free_blocks = _projective_blocks(extension, c2.generator)
    return _search(
        c1.GF,
        c1.n,
        fixed_rows,
        free_blocks,
        required,
        stop_at,
        get_workers(workers),
    )


def relative_distance(
    pair,
    budget: int | None = None,
    *,
    stop_at: int | None = None,
    workers: int | None = None,
) -> int:
    return relative_distance_result(
        pair, budget, stop_at=stop_at, workers=workers
    ).value


def relative_dual_distance(
    pair,
    budget: int | None = None,
    *,
    stop_at: int | None = None,
    workers: int | None = None,
) -> int:
    """d(C2^perp, C1^perp), the relative distance of the dual pair."""

    return relative_distance(pair.dual(), budget, stop_at=stop_at, workers=workers)
