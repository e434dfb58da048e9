#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair pairs` functionality"""

from hermpair.core.constructions import SEARCH_FAMILIES, best_pair_search, pair_candidates
from hermpair.core.errors import NoFeasiblePair
from hermpair.core.files import DocumentPairs

from .common import (
    EXIT_OK,
    context_for,
    emit,
    register_common_arguments,
    resolve_settings,
)

FAMILIES = ("improved", "lower", "upper", "onepoint")


def candidate_row(candidate):
    return (
        candidate.family,
        str(candidate.key),
        candidate.n,
        candidate.ell,
        candidate.dz,
        candidate.dx,
        candidate.params(candidate.q**2).label,
    )


def pairs_document(
    q, family=None, objective=None, min_ell=1, min_dz=1, min_dx=1
):
    """Either the best pair for an objective or every pair meeting the constraints"""

    families = (family,) if family else SEARCH_FAMILIES
    if objective is not None:
        result = best_pair_search(
            q,
            objective,
            min_ell=min_ell,
            min_dz=min_dz,
            min_dx=min_dx,
            families=families,
        )
        rows = [candidate_row(result.candidate)]
    else:
        rows = [
            candidate_row(c)
            for c in pair_candidates(q, families)
            if c.ell >= min_ell and c.dz >= min_dz and c.dx >= min_dx
        ]
        if not rows:
            raise NoFeasiblePair(
                f"no pair for q={q} with l >= {min_ell}, d_z >= {min_dz}, d_x >= {min_dx}"
            )
    return DocumentPairs(
        rows,
        command="pairs",
        q=q,
        family=family,
        objective=objective,
        min_l=min_ell,
        min_dz=min_dz,
        min_dx=min_dx,
    )


# Parser comes from the top-level command parsing
def parse(parser):
    registrar = register_common_arguments(parser)
    registrar.register("--family", type=str, choices=FAMILIES, help="pair family")
    registrar.register(
        "--objective",
        type=str,
        choices=("dz", "ell"),
        help="return only the best pair maximizing d_z or l",
    )
    registrar.register("--min-l", type=int, default=1, help="lower bound on l")
    registrar.register("--min-dz", type=int, default=1, help="lower bound on d_z")
    registrar.register("--min-dx", type=int, default=1, help="lower bound on d_x")
    args = resolve_settings(parser.parse_args())
    with context_for(args):
        document = pairs_document(
            args.q, args.family, args.objective, args.min_l, args.min_dz, args.min_dx
        )
    emit(document, args)
    return EXIT_OK
