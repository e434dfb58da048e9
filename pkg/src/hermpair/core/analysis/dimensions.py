#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Dimensions of the improved codes: exact counts and closed-form lower bounds."""

from __future__ import annotations

from dataclasses import dataclass
import warnings

from hermpair.core.errors import DeltaOutOfRange
from hermpair.core.semigroup import achievable_deltas, check_q, genus, h_star, round_up_delta

from .floors import floor_delta_log, floor_delta_log_ratio

RULES = (
    "small-delta",
    "mixed-a-positive",
    "mixed-a-nonpositive",
    "generic",
    "high-delta",
)


@dataclass(frozen=True)
class DimBoundResult:
    """Lower bound on dim E~(delta) next to the exact dimension.

    `requested` is the delta asked for; `delta` is the achievable designed
    distance it was rounded up to.
    """

    q: int
    delta: int
    requested: int
    bound: int
    exact: int
    rule: str
    decomposition: tuple[int, int] | None = None

    @property
    def vacuous(self) -> bool:
        return self.bound <= 0

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "delta": self.delta,
            "requested": self.requested,
            "bound": self.bound,
            "exact": self.exact,
            "rule": self.rule,
            "a": None if self.decomposition is None else self.decomposition[0],
            "b": None if self.decomposition is None else self.decomposition[1],
        }


def integer_point_bound(q: int, delta: int) -> int:
    """Lower bound on #{(x, y) in the corner box with (q^2 - x)(q - y) >= delta}."""

    if not 1 <= delta <= q * q:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {q * q}]")
    if delta < q:
        return q * q - floor_delta_log(delta)
    return q * q - floor_delta_log_ratio(q, delta)


def dim_improved_exact(q: int, delta: int) -> int:
    """#{lam in H*(Q) : sigma(lam) >= delta}."""

    if not 1 <= delta <= q**3:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {q**3}]")
    return sum(1 for element in h_star(q) if element.sigma >= delta)


def dim_dual_exact(q: int, delta: int) -> int:
    """#{lam in H*(Q) : mu(lam) < delta}, the dimension of C~(delta)^perp."""

    if not 1 <= delta <= q**3 + 1:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {q**3 + 1}]")
    return sum(1 for element in h_star(q) if element.mu < delta)


def triangle(a: int, b: int) -> int:
    """sum_{s=0}^{a+b} (s + 1)."""

    top = a + b
    if top < 0:
        return 0
    return (top + 1) * (top + 2) // 2


def split_qq1(q: int, value: int) -> tuple[int, int]:
    """Write value = a*q + b*(q+1) with 0 <= b < q."""

    b = value % q
    a = (value - b * (q + 1)) // q
    return a, b


def _bound(q: int, delta: int) -> tuple[int, str, tuple[int, int] | None]:
    n = q**3
    g = genus(q)
    if delta <= q:
        return n - floor_delta_log(delta), "small-delta", None
    if delta <= q * q - q:
        a, b = split_qq1(q, q * q - delta)
        bound = (
            n
            - delta
            - g
            + 1
            - triangle(a, b)
            + max(a, 0)
            + q * q
            - floor_delta_log_ratio(q, delta)
        )
        rule = "mixed-a-positive" if a > 0 else "mixed-a-nonpositive"
        return bound, rule, (a, b)
    if delta < n - 2 * g + 2:
        return n - g + 1 - delta, "generic", None
    a, b = split_qq1(q, n - delta)
    return triangle(a, b) - max(a, 0), "high-delta", (a, b)


def dim_bound_value(q: int, delta: int) -> int:
    """The closed-form lower bound alone, for an achievable delta."""

    return _bound(q, delta)[0]


def dim_bound(q: int, delta: int) -> DimBoundResult:
    """Closed-form lower bound on dim E~(delta).

    A delta outside sigma(H*(Q)) is first rounded up to the next designed
    distance, which leaves the code unchanged.
    """

    check_q(q)
    if not 1 <= delta <= q**3:
        raise DeltaOutOfRange(f"delta={delta} must lie in [1, {q**3}]")
    achievable = round_up_delta(q, delta)
    if achievable != delta:
        warnings.warn(
            f"delta={delta} is not a designed distance for q={q}; using {achievable}"
        )
    bound, rule, decomposition = _bound(q, achievable)
    result = DimBoundResult(
        q=q,
        delta=achievable,
        requested=int(delta),
        bound=bound,
        exact=dim_improved_exact(q, achievable),
        rule=rule,
        decomposition=decomposition,
    )
    if result.vacuous:
        warnings.warn(f"dimension bound for q={q}, delta={achievable} is vacuous")
    return result


def is_achievable(q: int, delta: int) -> bool:
    return delta in achievable_deltas(q)
