#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""hermpair core functionality.

Builds nested pairs of codes from the Hermitian curve over GF(q^2), computes
their exact and bounded parameters, and derives asymmetric quantum code and
ramp secret sharing parameters from them. Closed formulas are checked against
brute-force oracles at small q.

Available subpackages:
  field:
    Finite fields GF(p^m) with fixed Conway moduli and a stable element order.
  curve:
    Rational places of the Hermitian curve and monomial evaluations.
  semigroup:
    The Weierstrass semigroup at infinity, H*(Q), and the order bounds sigma
    and mu with their oracles and auxiliary lemma checks.
  codes:
    Linear codes, nested pairs, exhaustive distances, order bounds and the
    plain-text matrix format.
  analysis:
    Dimension, inclusion and codimension bounds with exact counterparts.
  constructions:
    Pair constructions, parameter records, searches, reference tables and the
    sharing curve.
  sharing:
    Ramp secret sharing: dealing, reconstruction and exact audits.
  files:
    Output documents rendered as CSV, markdown or JSON.
  workflow:
    The `hermpair` command line.
"""

# Submodules
from . import errors
from . import context
from . import field
from . import curve
from . import semigroup
from . import codes
from . import analysis
from . import constructions
from . import sharing
from . import files
from . import workflow

__all__ = [
    "errors",
    "context",
    "field",
    "curve",
    "semigroup",
    "codes",
    "analysis",
    "constructions",
    "sharing",
    "files",
    "workflow",
]
