#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Column schemas of the documents produced by each command"""

import polars as pl

from .document import OutputDocument, Variable


class DocumentSemigroup(OutputDocument):
    """H*(Q) with sigma and mu, ordered by j descending then i ascending"""

    def __init__(self, rows=None, **metadata):
        OutputDocument.__init__(self, rows, **metadata)
        self.variables = [
            Variable("j", description="multiple of q+1 in lambda = i*q + j*(q+1)"),
            Variable("i", description="multiple of q in lambda = i*q + j*(q+1)"),
            Variable("lambda", description="pole order at the point at infinity"),
            Variable("sigma", description="order bound for primary codes"),
            Variable("mu", description="order bound for dual codes"),
        ]


class DocumentPairs(OutputDocument):
    """Asymmetric quantum code parameters of nested pairs"""

    def __init__(self, rows=None, **metadata):
        OutputDocument.__init__(self, rows, **metadata)
        self.variables = [
            Variable("family", pl.Utf8, "construction family"),
            Variable("key", pl.Utf8, "(delta1, delta2), (i, j) or (lambda1, lambda2)"),
            Variable("n", description="code length"),
            Variable("l", description="codimension"),
            Variable("dz", description="relative distance of the pair"),
            Variable("dx", description="relative distance of the dual pair"),
            Variable("code", pl.Utf8, "[[n,l,dz/dx]] over GF(q^2)"),
        ]


class DocumentSharingCurve(OutputDocument):
    """Smallest reconstruction numbers per secret length"""

    def __init__(self, rows=None, **metadata):
        OutputDocument.__init__(self, rows, **metadata)
        self.variables = [
            Variable("l", description="secret length"),
            Variable("r_construction", description="best r over all constructions"),
            Variable("construction", pl.Utf8, "pair achieving r_construction"),
            Variable("r_goppa", description="best r from one-point pairs and the Goppa bound"),
            Variable("r_gap_bound", description="t plus the lower bound on r - t"),
        ]


class DocumentComparison(OutputDocument):
    """Reference codes next to the best codes found by the search"""

    def __init__(self, rows=None, **metadata):
        OutputDocument.__init__(self, rows, **metadata)
        self.variables = [
            Variable("parameters", pl.Utf8, "parameters of the reference construction"),
            Variable("reference", pl.Utf8, "reference code, padded to length q^3"),
            Variable("dz_max", pl.Utf8, "best d_z with l and d_x at least the reference"),
            Variable("dz_max_printed", pl.Utf8, "published d_z maximized code"),
            Variable("l_max", pl.Utf8, "best l with d_z and d_x at least the reference"),
            Variable("l_max_printed", pl.Utf8, "published l maximized code"),
            Variable("dominates", pl.Boolean, "found codes are at least as good as published"),
        ]


class DocumentReport(OutputDocument):
    """Verification outcomes"""

    def __init__(self, rows=None, **metadata):
        OutputDocument.__init__(self, rows, **metadata)
        self.variables = [
            Variable("suite", pl.Utf8),
            Variable("item", pl.Utf8),
            Variable("status", pl.Utf8, "PASS, FAIL or SKIPPED"),
            Variable("checked", description="number of cases checked"),
            Variable("detail", pl.Utf8),
        ]

    @property
    def failed(self) -> list:
        return [row for row in self.rows if row[2] == "FAIL"]
