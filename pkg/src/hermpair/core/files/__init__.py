#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Define output document formats.

A new command output is a subclass of OutputDocument whose __init__ sets the
column variables; rendering to CSV, markdown and JSON is shared.
"""

from .document import FORMATS, OutputDocument, Variable, artifact_version
from .documents import (
    DocumentComparison,
    DocumentPairs,
    DocumentReport,
    DocumentSemigroup,
    DocumentSharingCurve,
)

__all__ = [
    "FORMATS",
    "OutputDocument",
    "Variable",
    "artifact_version",
    "DocumentComparison",
    "DocumentPairs",
    "DocumentReport",
    "DocumentSemigroup",
    "DocumentSharingCurve",
]
