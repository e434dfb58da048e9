#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair semigroup` functionality"""

from hermpair.core.files import DocumentSemigroup
from hermpair.core.semigroup import h_star

from .common import (
    EXIT_OK,
    context_for,
    emit,
    register_common_arguments,
    resolve_settings,
)


def semigroup_document(q):
    """The lambda, sigma and mu grids of H*(Q) as one row per element"""

    rows = [
        (e.j, e.i, e.lam, e.sigma, e.mu)
        for e in sorted(h_star(q), key=lambda e: (-e.j, e.i))
    ]
    return DocumentSemigroup(rows, command="semigroup", q=q)


# Parser comes from the top-level command parsing
def parse(parser):
    register_common_arguments(parser)
    args = resolve_settings(parser.parse_args())
    with context_for(args):
        document = semigroup_document(args.q)
    emit(document, args)
    return EXIT_OK
