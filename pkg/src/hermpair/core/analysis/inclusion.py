#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Largest delta2 with C~(delta2)^perp contained in E~(delta1).

The closed forms split delta1 into five ranges (right corner, right mixed,
middle, left mixed, left corner). The ranges share the endpoint
q^3 - q^2; the first matching range wins, which the definitional oracle
confirms for every supported q.
"""

from __future__ import annotations

from dataclasses import dataclass

from hermpair.core.errors import NotAchievableDelta
from hermpair.core.semigroup import achievable_deltas, check_q, h_star

RULES = ("right-corner", "right-mixed", "middle", "left-mixed", "left-corner")


@dataclass(frozen=True)
class InclusionResult:
    q: int
    delta1: int
    delta2_max: int
    rule: str
    case: str = ""
    decomposition: tuple[int, int] | None = None
    oracle: int | None = None

    @property
    def agrees(self) -> bool | None:
        if self.oracle is None:
            return None
        return self.oracle == self.delta2_max

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "delta1": self.delta1,
            "delta2_max": self.delta2_max,
            "rule": self.rule,
            "case": self.case,
            "oracle": self.oracle,
        }


def delta2_max_oracle(q: int, delta1: int) -> int:
    """min mu(lam) over lam with sigma(lam) < delta1; q^3 + 1 when none exists."""

    check_q(q)
    mus = [e.mu for e in h_star(q) if e.sigma < delta1]
    return min(mus) if mus else q**3 + 1


def inclusion_holds(q: int, delta1: int, delta2: int) -> bool:
    """sigma(lam) < delta1 implies mu(lam) >= delta2, for every lam in H*(Q)."""

    return all(e.mu >= delta2 for e in h_star(q) if e.sigma < delta1)


def inclusion_symmetric(q: int, delta1: int, delta2: int) -> tuple[bool, bool]:
    """Both readings of the inclusion condition: (sigma -> mu, mu -> sigma).

    The two entries always agree.
    """

    forward = inclusion_holds(q, delta1, delta2)
    backward = all(e.sigma >= delta2 for e in h_star(q) if e.mu < delta1)
    return forward, backward


def _right_corner(q, delta1):
    return q**3 - (delta1 - 2) * (q + 1), "", None


def _right_mixed(q, delta1):
    a, b = divmod(delta1 - (q + 1), q)
    if b <= a:
        return q**3 - q * q + q - delta1 + 2, "b<=a", (a, b)
    return q**3 - q * q - a * (q + 1), "b>a", (a, b)


def _middle(q, delta1):
    return q**3 - q * q + q + 2 - delta1, "", None


def _left_mixed(q, delta1):
    a, b = divmod(q**3 - q * q - delta1, q)
    if b < a:
        return (a + 1) * q + b + 2, "b<a", (a, b)
    if b < q - 1:
        return (a + 2) * q, "a<=b<q-1", (a, b)
    return (a + 2) * q + 1, "b=q-1", (a, b)


def _left_corner(q, delta1):
    a, b = divmod(q**3 - delta1, q)
    if b < a:
        return a + 1, "b<a", (a, b)
    return a + 2, "b>=a", (a, b)


def _dispatch(q: int, delta1: int):
    n = q**3
    ranges = (
        ("right-corner", q, _right_corner),
        ("right-mixed", q * q - q, _right_mixed),
        ("middle", n - 2 * q * q + 2 * q, _middle),
        ("left-mixed", n - q * q, _left_mixed),
        ("left-corner", n, _left_corner),
    )
    for rule, upper, formula in ranges:
        if delta1 <= upper:
            return (rule, *formula(q, delta1))
    raise NotAchievableDelta(f"delta1={delta1} exceeds n={n}")


def delta2_max(q: int, delta1: int, *, with_oracle: bool = False) -> InclusionResult:
    """Closed-form inclusion threshold for an achievable delta1 >= 2."""

    check_q(q)
    if delta1 < 2 or delta1 not in achievable_deltas(q):
        raise NotAchievableDelta(
            f"delta1={delta1} is not a designed distance >= 2 for q={q}"
        )
    rule, value, case, decomposition = _dispatch(q, delta1)
    return InclusionResult(
        q=q,
        delta1=delta1,
        delta2_max=value,
        rule=rule,
        case=case,
        decomposition=decomposition,
        oracle=delta2_max_oracle(q, delta1) if with_oracle else None,
    )
