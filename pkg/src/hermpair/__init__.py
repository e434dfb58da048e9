#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#

"""Submodules"""

from . import core

__all__ = ["core"]
