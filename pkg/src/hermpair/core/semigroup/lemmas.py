#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Exhaustive checks of the auxiliary statements about sigma and mu.

Each check walks the quantified index ranges of one statement and evaluates
sigma and mu through the definitional oracles, so it is independent of the
closed formulas it is meant to support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .semigroup import check_q, mu_oracle, sigma_oracle


@dataclass
class LemmaResult:
    """Outcome of one exhaustive lemma check."""

    name: str
    passed: bool = True
    checked: int = 0
    counterexample: dict | None = None
    note: str = ""

    def record(self, ok: bool, **witness) -> None:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = witness


@dataclass
class LemmaReport:
    q: int
    results: list[LemmaResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def __getitem__(self, name: str) -> LemmaResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "passed": self.passed,
            "lemmas": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "checked": r.checked,
                    "counterexample": r.counterexample,
                    "note": r.note,
                }
                for r in self.results
            ],
        }


def verify_order_bound_lemmas(q: int) -> LemmaReport:
    """Check every auxiliary sigma/mu lemma exhaustively for one q.

    Args:
        q: (int) supported Hermitian parameter

    Returns:
        LemmaReport with one LemmaResult per lemma
    """

    check_q(q)

    @lru_cache(maxsize=None)
    def sigma(i, j):
        return sigma_oracle(q, i * q + j * (q + 1))

    @lru_cache(maxsize=None)
    def mu(i, j):
        return mu_oracle(q, i * q + j * (q + 1))

    n = q**3
    top = q * q - 1
    corner = q * q - q
    report = LemmaReport(q=q)

    # sigma(lambda) >= n - lambda, strict exactly in the upper-right corner
    result = LemmaResult("sigma-exceeds-goppa")
    for i in range(q * q):
        for j in range(q):
            lam = i * q + j * (q + 1)
            value = sigma(i, j)
            strict_expected = corner <= i < q * q and 1 <= j < q
            ok = value >= n - lam and (value > n - lam) == strict_expected
            result.record(ok, i=i, j=j, sigma=value, goppa=n - lam)
    report.results.append(result)

    result = LemmaResult("sigma-step")
    for i in range(1, corner):
        for j in range(q - 1):
            a, b = sigma(i, j), sigma(i - 1, j + 1)
            result.record(a == b + 1, i=i, j=j, left=a, right=b)
    for i in range(corner):
        a, b = sigma(i, q - 1), sigma(i + q, 0)
        result.record(a == b + 1, i=i, j=q - 1, left=a, right=b)
    report.results.append(result)

    result = LemmaResult("sigma-chain-decreasing")
    chain = [sigma(i, 0) for i in range(q * q)] + [sigma(top, j) for j in range(1, q)]
    for position, (a, b) in enumerate(zip(chain, chain[1:])):
        result.record(a > b, position=position, left=a, right=b)
    report.results.append(result)

    result = LemmaResult("corner-symmetry")
    for s in range(q - 1):
        for t in range(q - 1):
            a, b = sigma(corner + s, t), sigma(corner + t, s)
            result.record(a == b, s=s, t=t, left=a, right=b)
    report.results.append(result)

    result = LemmaResult(
        "corner-monotone",
        note=(
            "second part checked for 0 <= j <= q-1; the stated range 0 <= j <= q^2-1"
            " exceeds the j-range of H*(Q) and is treated as a suspected typo"
        ),
    )
    for i in range(corner, q * q):
        for s in range(0, i - corner + 1):
            a, b = sigma(i - s, s), sigma(i, 0)
            result.record(a >= b, part=1, i=i, s=s, left=a, right=b)
    for j in range(q):
        for s in range(0, q - j):
            a, b = sigma(top - s, j + s), sigma(top, j)
            result.record(a >= b, part=2, j=j, s=s, left=a, right=b)
    report.results.append(result)

    result = LemmaResult("small-sigma-corner")
    for i in range(q * q):
        for j in range(q):
            value = sigma(i, j)
            result.record(value > q or corner <= i, i=i, j=j, sigma=value)
    report.results.append(result)

    result = LemmaResult(
        "mu-plus-sigma-window", note="windows checked as stated; no partition of H*(Q) is implied"
    )
    target = n - (q * q - q - 1)
    for i in range(q * q):
        for j in range(q):
            in_window = (
                (q <= i < corner)
                or (corner < i <= top and j == 0)
                or (0 <= i < q and j == q - 1)
            )
            if not in_window:
                continue
            total = mu(i, j) + sigma(i, j)
            result.record(total == target, i=i, j=j, total=total, expected=target)
    report.results.append(result)

    return report
