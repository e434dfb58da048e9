#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Define the command line workflow.

Every command lives in its own module with a `parse(parser)` function that
registers its options on the top-level parser, runs the library call and
returns an exit status.

Available modules:
  hermpair.core.workflow.semigroup:   H*(Q) with sigma and mu
  hermpair.core.workflow.pairs:       nested pair parameters and searches
  hermpair.core.workflow.sss_curve:   reconstruction numbers per secret length
  hermpair.core.workflow.tables:      replay of the published comparison tables
  hermpair.core.workflow.verify:      formula against oracle suites
  hermpair.core.workflow.sharing:     scheme files, dealing and reconstruction
  hermpair.core.workflow.load_input:  load and return a hermpair input file
"""

from .all import COMMANDS, main
from .load_input import (
    get_validated_input_filetype,
    load_input,
    validate_required_input_keys,
    write_input,
)

__all__ = [
    "COMMANDS",
    "main",
    "get_validated_input_filetype",
    "load_input",
    "validate_required_input_keys",
    "write_input",
]
