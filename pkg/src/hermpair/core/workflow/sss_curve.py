#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair sss_curve` functionality"""

from hermpair.core.constructions import sharing_curve
from hermpair.core.files import DocumentSharingCurve

from .common import (
    EXIT_OK,
    context_for,
    emit,
    register_common_arguments,
    resolve_settings,
)


def sharing_curve_document(q, t):
    rows = [
        (r.ell, r.r_construction, r.construction, r.r_goppa, r.r_gap_bound)
        for r in sharing_curve(q, t)
    ]
    return DocumentSharingCurve(rows, command="sss_curve", q=q, t=t)


# Parser comes from the top-level command parsing
def parse(parser):
    registrar = register_common_arguments(parser)
    registrar.register("--t", type=int, default=0, help="required privacy number")
    args = resolve_settings(parser.parse_args())
    with context_for(args):
        document = sharing_curve_document(args.q, args.t)
    emit(document, args)
    return EXIT_OK
