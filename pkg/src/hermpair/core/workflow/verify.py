#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair verify`: closed formulas against brute-force oracles.

Each suite yields report rows (suite, item, status, checked, detail). Items
whose enumeration exceeds the budget are reported as SKIPPED, never as PASS.
"""

import warnings

from hermpair.core.analysis import (
    delta2_max,
    delta2_max_oracle,
    dim_bound_value,
    dim_improved_exact,
)
from hermpair.core.codes import (
    dual,
    improved_dual_perp,
    improved_primary,
    min_distance,
    onepoint_code,
    relative_distance,
    relative_dual_distance,
    required_work,
)
from hermpair.core.constructions import (
    improved_pair,
    small_codim_pair_lower,
    small_codim_pair_upper,
)
from hermpair.core.context import get_budget
from hermpair.core.curve import curve_create
from hermpair.core.errors import BudgetExceeded
from hermpair.core.files import DocumentReport
from hermpair.core.semigroup import (
    achievable_deltas,
    check_q,
    h_star,
    mu_formula,
    mu_oracle,
    sigma_formula,
    sigma_oracle,
    verify_order_bound_lemmas,
)
from hermpair.core.sharing import (
    dealer_spec,
    exact_privacy_number,
    exact_reconstruction_number,
)

from .common import (
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    context_for,
    emit,
    register_common_arguments,
    resolve_settings,
    status,
)

SHARING_IMPROVED_Q2 = ((4, 3), (5, 2), (3, 3))


def _row(suite, item, failures, checked, detail=""):
    if failures:
        return (suite, item, "FAIL", checked, "; ".join(failures[:5]))
    return (suite, item, "PASS", checked, detail)


def _skipped(suite, item, exc):
    warnings.warn(f"SKIPPED {suite}/{item}: {exc}")
    return (suite, item, "SKIPPED", 0, str(exc))


def suite_semigroup(q, budget):
    elements = h_star(q)
    for name, formula, oracle in (
        ("sigma", sigma_formula, sigma_oracle),
        ("mu", mu_formula, mu_oracle),
    ):
        failures = [
            f"lambda={e.lam}: {formula(q, e.lam)} != {oracle(q, e.lam)}"
            for e in elements
            if formula(q, e.lam) != oracle(q, e.lam)
        ]
        yield _row("semigroup", name, failures, len(elements))


def suite_lemmas(q, budget):
    for result in verify_order_bound_lemmas(q).results:
        failures = [] if result.passed else [str(result.counterexample)]
        yield _row("lemmas", result.name, failures, result.checked, result.note)


def suite_duality(q, budget):
    ctx = curve_create(q)
    n = ctx.n
    failures = []
    elements = h_star(q)
    for e in elements:
        partner = n + q * q - q - 2 - e.lam
        if not dual(onepoint_code(ctx, e.lam)).row_space_equals(onepoint_code(ctx, partner)):
            failures.append(f"lambda={e.lam}")
    yield _row("duality", "onepoint-dual", failures, len(elements))

    deltas = achievable_deltas(q)
    failures = [
        f"delta={d}"
        for d in deltas
        if not improved_primary(ctx, d).row_space_equals(dual(improved_dual_perp(ctx, d)))
    ]
    yield _row("duality", "improved-dual", failures, len(deltas))

    high = [d for d in deltas if d > q * q - q]
    failures = [
        f"delta={d}"
        for d in high
        if not improved_primary(ctx, d).row_space_equals(onepoint_code(ctx, n - d))
    ]
    yield _row("duality", "improved-equals-onepoint", failures, len(high))

    corner = q * q - q
    improved = improved_primary(ctx, corner)
    onepoint = onepoint_code(ctx, n - corner)
    strict = onepoint.is_subcode_of(improved) and onepoint.k < improved.k
    yield _row(
        "duality",
        "improved-strictly-larger",
        [] if strict else [f"delta={corner}"],
        1,
    )


def suite_inclusion(q, budget):
    deltas = [d for d in achievable_deltas(q) if d >= 2]
    failures = []
    for d in deltas:
        result = delta2_max(q, d)
        oracle = delta2_max_oracle(q, d)
        if result.delta2_max != oracle:
            failures.append(f"delta1={d}: {result.rule} gives {result.delta2_max}, oracle {oracle}")
    yield _row("inclusion", "delta2_max", failures, len(deltas))


def suite_dims(q, budget):
    deltas = achievable_deltas(q)
    failures = [
        f"delta={d}: bound {dim_bound_value(q, d)} > {dim_improved_exact(q, d)}"
        for d in deltas
        if dim_bound_value(q, d) > dim_improved_exact(q, d)
    ]
    yield _row("dims", "bound<=exact", failures, len(deltas))


def suite_distances(q, budget):
    ctx = curve_create(q)
    budget = get_budget(budget)
    for d in achievable_deltas(q):
        code = improved_primary(ctx, d)
        item = f"improved({d})"
        if required_work(ctx.field.order, code.k) > budget:
            yield _skipped(
                "distances", item, BudgetExceeded(required_work(ctx.field.order, code.k), budget)
            )
            continue
        value = min_distance(code, budget)
        failures = [] if value == d else [f"distance {value}"]
        yield _row("distances", item, failures, 1)
    yield from _small_codim_distances(ctx, budget)


def _small_codim_distances(ctx, budget):
    q = ctx.q
    for i in range(q):
        for j in range(i, q):
            for build in (small_codim_pair_lower, small_codim_pair_upper):
                pair = build(ctx, i, j)
                item = pair.construction
                try:
                    d_rel = relative_distance(pair, budget)
                    d_rel_dual = relative_dual_distance(pair, budget)
                except BudgetExceeded as exc:
                    yield _skipped("distances", item, exc)
                    continue
                failures = []
                if d_rel != pair.d_rel.value:
                    failures.append(f"d(C1, C2) = {d_rel}, formula {pair.d_rel.value}")
                if d_rel_dual != pair.d_rel_dual.value:
                    failures.append(
                        f"d(C2^perp, C1^perp) = {d_rel_dual}, formula {pair.d_rel_dual.value}"
                    )
                yield _row(
                    "distances", item, failures, 2, f"d_rel={d_rel}, d_rel_dual={d_rel_dual}"
                )


def _sharing_pairs(ctx):
    q = ctx.q
    for i in range(q):
        for j in range(i, q):
            for build in (small_codim_pair_lower, small_codim_pair_upper):
                pair = build(ctx, i, j)
                if pair.c2.k > 0 and pair.c1.k < ctx.n:
                    yield pair
    for delta1, delta2 in SHARING_IMPROVED_Q2:
        yield improved_pair(ctx, delta1, delta2)


def suite_sharing(q, budget):
    if q != 2:
        yield _skipped("sharing", "audit", "the subset audit runs at q=2 only")
        return
    ctx = curve_create(q)
    for pair in _sharing_pairs(ctx):
        item = pair.construction
        try:
            d_rel = relative_distance(pair, budget)
            d_rel_dual = relative_dual_distance(pair, budget)
            spec = dealer_spec(pair)
            t = exact_privacy_number(spec, budget)
            r = exact_reconstruction_number(spec, budget)
        except BudgetExceeded as exc:
            yield _skipped("sharing", item, exc)
            continue
        failures = []
        if t != d_rel_dual - 1:
            failures.append(f"t={t} but d(C2^perp, C1^perp) - 1 = {d_rel_dual - 1}")
        if r != ctx.n - d_rel + 1:
            failures.append(f"r={r} but n - d(C1, C2) + 1 = {ctx.n - d_rel + 1}")
        yield _row("sharing", item, failures, 2, f"t={t}, r={r}")


SUITES = {
    "semigroup": suite_semigroup,
    "lemmas": suite_lemmas,
    "duality": suite_duality,
    "inclusion": suite_inclusion,
    "dims": suite_dims,
    "distances": suite_distances,
    "sharing": suite_sharing,
}


def verify(q, suites=None, budget=None):
    """Run the requested suites (all by default) and collect a report"""

    check_q(q)
    suites = list(SUITES) if not suites else suites
    rows = []
    for name in suites:
        if name not in SUITES:
            raise ValueError(f'Unknown verification suite "{name}"')
        rows.extend(SUITES[name](q, budget))
    return DocumentReport(rows, command="verify", q=q, suites=suites, budget=budget)


# Parser comes from the top-level command parsing
def parse(parser):
    registrar = register_common_arguments(parser)
    registrar.register(
        "--suite", type=str, action="append", choices=tuple(SUITES), help="suite to run"
    )
    args = resolve_settings(parser.parse_args())
    with context_for(args):
        report = verify(args.q, args.suite, args.budget)
    emit(report, args)
    failed = report.failed
    for row in failed:
        status(f"FAIL {row[0]}/{row[1]}: {row[4]}")
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK
