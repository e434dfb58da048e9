#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair tables` functionality: replay of the published comparisons"""

from hermpair.core.constructions import (
    best_pair_search,
    cartesian_params_general,
    cartesian_params_plane,
    la_guardia_params,
    pad_to_length,
    tables,
)
from hermpair.core.files import DocumentComparison

from .common import (
    EXIT_OK,
    context_for,
    emit,
    register_common_arguments,
    resolve_settings,
)
from .pairs import pairs_document
from .semigroup import semigroup_document

COMPARISON_Q = 3


def _label(triple, n=COMPARISON_Q**3, alphabet=COMPARISON_Q**2):
    ell, dz, dx = triple
    return f"[[{n},{ell},{dz}/{dx}]]_{alphabet}"


def compare_with_reference(reference, dz_max_printed, ell_max_printed):
    """Search the best d_z and best l pairs dominating a padded reference code.

    Returns:
        (dz_max candidate, l_max candidate, dominates) where `dominates` states
        that each search reaches the published value of its own objective
    """

    q = COMPARISON_Q
    by_dz = best_pair_search(
        q, "dz", min_ell=reference.ell, min_dx=reference.dx
    ).candidate
    by_ell = best_pair_search(
        q, "ell", min_dz=reference.dz, min_dx=reference.dx
    ).candidate
    dominates = by_dz.dz >= dz_max_printed[1] and by_ell.ell >= ell_max_printed[0]
    return by_dz, by_ell, dominates


def _comparison_row(parameters, reference, row):
    by_dz, by_ell, dominates = compare_with_reference(reference, row.dz_max, row.ell_max)
    return (
        parameters,
        reference.label,
        _label((by_dz.ell, by_dz.dz, by_dz.dx)),
        _label(row.dz_max),
        _label((by_ell.ell, by_ell.dz, by_ell.dx)),
        _label(row.ell_max),
        dominates,
    )


def grs_document():
    rows = []
    n = COMPARISON_Q**3
    for row in tables.GRS_Q3:
        reference = pad_to_length(
            la_guardia_params(row.m1, row.m2, row.k, row.c, q=COMPARISON_Q), n
        )
        rows.append(_comparison_row(f"({row.m1},{row.m2},{row.k},{row.c})", reference, row))
    return DocumentComparison(rows, command="tables", table="grs", q=COMPARISON_Q)


def cartesian_document():
    rows = []
    n = COMPARISON_Q**3
    alphabet = COMPARISON_Q**2
    for row in tables.CARTESIAN_Q3:
        ell, dz, dx = row.reference
        if row.kind == "plane":
            params = cartesian_params_plane(row.s, row.m, ell, alphabet=alphabet)
        else:
            params = cartesian_params_general(row.s, row.m, dz, dx, alphabet=alphabet)
        reference = pad_to_length(params, n)
        rows.append(_comparison_row(f"{row.kind}({row.s},{row.m})", reference, row))
    return DocumentComparison(rows, command="tables", table="cartesian", q=COMPARISON_Q)


TABLES = {
    "semigroup": lambda q: semigroup_document(q or 4),
    "grs": lambda q: grs_document(),
    "small_codim": lambda q: pairs_document(q or COMPARISON_Q, "lower", min_dz=2, min_dx=2),
    "cartesian": lambda q: cartesian_document(),
}


# Parser comes from the top-level command parsing
def parse(parser):
    registrar = register_common_arguments(parser, with_q=False)
    registrar.register("--table", type=str, choices=tuple(TABLES), required=True)
    registrar.register("--q", type=int, help="q for the semigroup and small_codim tables")
    args = resolve_settings(parser.parse_args(), require_q=False)
    with context_for(args):
        document = TABLES[args.table](args.q)
    emit(document, args)
    return EXIT_OK
