#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Defines all `hermpair` command line functionality"""

import argparse

from hermpair.core.errors import BudgetExceeded, HermpairError

from . import pairs, semigroup, sharing, sss_curve, tables, verify
from .common import EXIT_BUDGET, EXIT_USAGE, status

COMMANDS = {
    "semigroup": semigroup.parse,
    "pairs": pairs.parse,
    "sss_curve": sss_curve.parse,
    "tables": tables.parse,
    "verify": verify.parse,
    "scheme": sharing.parse_scheme,
    "deal": sharing.parse_deal,
    "reconstruct": sharing.parse_reconstruct,
}


def main():
    """Main function for any hermpair command from the command line

    Returns:
        exit status: 0 success, 1 verification failure, 2 usage or constraint
        error, 3 budget exceeded, 4 undetermined reconstruction
    """

    parser = argparse.ArgumentParser(
        prog="hermpair",
        description="Nested Hermitian code pairs, quantum code and secret sharing parameters",
    )
    parser.add_argument(
        "command",
        action="store",
        choices=tuple(COMMANDS),
        help="command to run",
    )

    # Only parse the command here; each command registers its own options.
    args, _ = parser.parse_known_args()
    try:
        return COMMANDS[args.command](parser)
    except BudgetExceeded as exc:
        status(f"error: {exc}")
        return EXIT_BUDGET
    except (HermpairError, ValueError, KeyError, OSError) as exc:
        status(f"error: {exc}")
        return EXIT_USAGE
