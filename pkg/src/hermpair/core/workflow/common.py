#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Options and output handling shared by all `hermpair` commands"""

import sys

from hermpair.core.context import run_context
from hermpair.core.files import FORMATS

from ._argument_registrar import _ArgumentRegistrar
from .load_input import load_input

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_UNDETERMINED = 4


def register_common_arguments(parser, *, with_q=True, with_output=True):
    """Register the options every command understands and return the registrar"""

    registrar = _ArgumentRegistrar(parser)
    registrar.register(
        "--input",
        type=str,
        help="optional YAML or JSON file whose `settings` block provides defaults"
        + ", for example: --input run.yaml",
    )
    if with_q:
        registrar.register(
            "--q", type=int, help="Hermitian parameter; codes live over GF(q^2)"
        )
    if with_output:
        registrar.register(
            "--format",
            type=str,
            choices=FORMATS,
            help="output format (default csv, or inferred from --output)",
        )
        registrar.register("--output", type=str, help="file to write instead of stdout")
    registrar.register(
        "--budget", type=int, help="maximum number of enumerated vectors or subsets"
    )
    registrar.register("--np", type=int, help="number of worker threads")
    registrar.register("--seed", type=int, help="seed for dealing shares")
    return registrar


def resolve_settings(args, require_q=True):
    """Fill options left unset on the command line from the input file"""

    if getattr(args, "input", None):
        settings = load_input(args.input)["settings"]
        for key, value in settings.items():
            if hasattr(args, key) and getattr(args, key) is None:
                setattr(args, key, value)
    if require_q and getattr(args, "q", None) is None:
        raise ValueError("--q is required (on the command line or in --input settings)")
    return args


def status(message):
    """Status lines go to stderr so that stdout stays machine readable"""

    print(message, file=sys.stderr)


def emit(document, args):
    """Print or write an OutputDocument according to --format/--output"""

    if args.output:
        document.write(args.output, args.format)
        status(f"wrote {args.output}")
    else:
        sys.stdout.write(document.render(args.format or "csv"))


def context_for(args):
    """Run context carrying --budget, --np and --seed"""

    return run_context(
        budget=getattr(args, "budget", None),
        workers=getattr(args, "np", None),
        seed=getattr(args, "seed", None),
    )
