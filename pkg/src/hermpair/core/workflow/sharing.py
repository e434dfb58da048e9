#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines `hermpair scheme`, `hermpair deal` and `hermpair reconstruct`"""

from hermpair.core.constructions import (
    improved_pair,
    onepoint_pair,
    small_codim_pair_lower,
    small_codim_pair_upper,
)
from hermpair.core.curve import curve_create
from hermpair.core.sharing import (
    Undetermined,
    deal,
    dealer_spec,
    read_scheme,
    read_secret,
    read_shares,
    reconstruct,
    write_scheme,
    write_secret,
    write_shares,
)

from .common import (
    EXIT_OK,
    EXIT_UNDETERMINED,
    context_for,
    register_common_arguments,
    resolve_settings,
    status,
)

BUILDERS = {
    "improved": improved_pair,
    "lower": small_codim_pair_lower,
    "upper": small_codim_pair_upper,
    "onepoint": onepoint_pair,
}


def build_scheme(q, family, key, randomness="seeded"):
    """Dealer for the pair `family` with parameters `key` (two integers)"""

    if family not in BUILDERS:
        raise ValueError(f'Unknown pair family "{family}"')
    pair = BUILDERS[family](curve_create(q), *key)
    return dealer_spec(pair, randomness)


# Parser comes from the top-level command parsing
def parse_scheme(parser):
    registrar = register_common_arguments(parser, with_output=False)
    registrar.register("--family", type=str, choices=tuple(BUILDERS), required=True)
    registrar.register(
        "--key",
        type=int,
        nargs=2,
        required=True,
        metavar=("A", "B"),
        help="(delta1 delta2), (i j) or (lambda1 lambda2) depending on --family",
    )
    registrar.register(
        "--randomness", type=str, choices=("seeded", "system"), default="seeded"
    )
    registrar.register("--output", type=str, required=True, help="scheme file to write")
    args = resolve_settings(parser.parse_args())
    spec = build_scheme(args.q, args.family, tuple(args.key), args.randomness)
    write_scheme(spec, args.output)
    status(f"wrote scheme {spec.scheme_id} (n={spec.n}, l={spec.ell}) to {args.output}")
    return EXIT_OK


# Parser comes from the top-level command parsing
def parse_deal(parser):
    registrar = register_common_arguments(parser, with_q=False, with_output=False)
    registrar.register("--scheme", type=str, required=True, help="scheme file")
    registrar.register("--secret", type=str, required=True, help="secret file")
    registrar.register("--output", type=str, required=True, help="share file to write")
    args = resolve_settings(parser.parse_args(), require_q=False)
    with context_for(args):
        spec = read_scheme(args.scheme)
        bundle = deal(spec, read_secret(args.secret))
    write_shares(bundle, args.output)
    status(f"wrote {len(bundle)} shares to {args.output}")
    return EXIT_OK


# Parser comes from the top-level command parsing
def parse_reconstruct(parser):
    registrar = register_common_arguments(parser, with_q=False, with_output=False)
    registrar.register("--scheme", type=str, required=True, help="scheme file")
    registrar.register("--shares", type=str, required=True, help="share file")
    registrar.register("--output", type=str, help="secret file to write")
    args = resolve_settings(parser.parse_args(), require_q=False)
    spec = read_scheme(args.scheme)
    result = reconstruct(spec, read_shares(args.shares))
    if isinstance(result, Undetermined):
        free = ", ".join(str(i) for i in result.free)
        status(f"undetermined: secret coordinates {free} are not fixed by these shares")
        return EXIT_UNDETERMINED
    if args.output:
        write_secret(result, args.output)
        status(f"wrote secret to {args.output}")
    else:
        print(" ".join(str(x) for x in result))
    return EXIT_OK
