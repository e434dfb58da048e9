#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Published reference parameters replayed by the `tables` command and the tests.

Code tuples are stored as (l, d_z, d_x); all codes have length q^3.
"""

from __future__ import annotations

from dataclasses import dataclass

Triple = tuple[int, int, int]

# q = 4 grids, rows j = 3, 2, 1, 0 and columns i = 0..15
SEMIGROUP_Q4 = {
    "lambda": (
        tuple(range(15, 76, 4)),
        tuple(range(10, 71, 4)),
        tuple(range(5, 66, 4)),
        tuple(range(0, 61, 4)),
    ),
    "sigma": (
        (49, 45, 41, 37, 33, 29, 25, 21, 17, 13, 9, 5, 4, 3, 2, 1),
        (54, 50, 46, 42, 38, 34, 30, 26, 22, 18, 14, 10, 8, 6, 4, 2),
        (59, 55, 51, 47, 43, 39, 35, 31, 27, 23, 19, 15, 12, 9, 6, 3),
        (64, 60, 56, 52, 48, 44, 40, 36, 32, 28, 24, 20, 16, 12, 8, 4),
    ),
    "mu": (
        (4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64),
        (3, 6, 9, 12, 15, 19, 23, 27, 31, 35, 39, 43, 47, 51, 55, 59),
        (2, 4, 6, 8, 10, 14, 18, 22, 26, 30, 34, 38, 42, 46, 50, 54),
        (1, 2, 3, 4, 5, 9, 13, 17, 21, 25, 29, 33, 37, 41, 45, 49),
    ),
}


@dataclass(frozen=True)
class GrsRow:
    """A Reed-Solomon comparison row for q = 3."""

    m1: int
    m2: int
    k: int
    c: int
    reference: Triple
    dz_max: Triple
    ell_max: Triple


GRS_Q3 = (
    GrsRow(2, 13, 2, 10, (2, 12, 2), (2, 23, 2), (12, 12, 2)),
    GrsRow(2, 13, 3, 8, (2, 11, 3), (2, 18, 4), (11, 11, 3)),
    GrsRow(2, 13, 4, 6, (2, 10, 4), (2, 18, 4), (10, 10, 4)),
    GrsRow(2, 13, 5, 4, (2, 9, 5), (2, 16, 6), (9, 9, 6)),
    GrsRow(2, 13, 6, 2, (2, 8, 6), (2, 16, 6), (10, 8, 6)),
    GrsRow(3, 9, 3, 4, (3, 7, 3), (3, 19, 3), (15, 7, 3)),
    GrsRow(3, 9, 4, 2, (3, 6, 4), (3, 17, 4), (15, 6, 4)),
    GrsRow(2, 13, 3, 9, (4, 11, 2), (4, 20, 2), (13, 11, 2)),
    GrsRow(2, 13, 4, 7, (4, 10, 3), (4, 18, 3), (12, 10, 3)),
    GrsRow(2, 13, 5, 5, (4, 9, 4), (4, 16, 4), (11, 9, 4)),
    GrsRow(2, 13, 6, 3, (4, 8, 5), (4, 14, 6), (10, 8, 6)),
    GrsRow(2, 13, 7, 1, (4, 7, 6), (4, 14, 6), (11, 7, 6)),
    GrsRow(2, 13, 4, 8, (6, 10, 2), (6, 18, 2), (14, 10, 2)),
    GrsRow(2, 13, 5, 6, (6, 9, 3), (6, 16, 3), (13, 9, 3)),
    GrsRow(2, 13, 6, 4, (6, 8, 4), (6, 14, 4), (12, 8, 4)),
    GrsRow(2, 13, 7, 2, (6, 7, 5), (6, 12, 6), (11, 7, 6)),
    GrsRow(2, 13, 5, 7, (8, 9, 2), (8, 16, 2), (15, 9, 2)),
    GrsRow(2, 13, 6, 5, (8, 8, 3), (8, 14, 3), (14, 8, 3)),
    GrsRow(2, 13, 7, 3, (8, 7, 4), (8, 12, 4), (13, 7, 4)),
    GrsRow(2, 13, 8, 1, (8, 6, 5), (8, 10, 6), (13, 6, 6)),
    GrsRow(2, 13, 6, 6, (10, 8, 2), (10, 14, 2), (16, 8, 2)),
    GrsRow(2, 13, 7, 4, (10, 7, 3), (10, 12, 3), (15, 7, 3)),
    GrsRow(2, 13, 8, 2, (10, 6, 4), (10, 10, 4), (15, 6, 4)),
    GrsRow(2, 13, 7, 5, (12, 7, 2), (12, 12, 2), (17, 7, 2)),
    GrsRow(2, 13, 8, 3, (12, 6, 3), (12, 10, 3), (17, 6, 3)),
    GrsRow(2, 13, 9, 1, (12, 5, 4), (12, 8, 4), (15, 6, 4)),
    GrsRow(2, 13, 8, 4, (14, 6, 2), (14, 10, 2), (19, 6, 2)),
    GrsRow(2, 13, 9, 2, (14, 5, 3), (14, 8, 3), (14, 8, 3)),
    GrsRow(2, 13, 9, 3, (16, 5, 2), (16, 8, 2), (19, 6, 2)),
    GrsRow(2, 13, 10, 1, (16, 4, 3), (17, 6, 3), (19, 4, 3)),
    GrsRow(2, 13, 10, 2, (18, 4, 2), (19, 6, 2), (21, 4, 2)),
    GrsRow(2, 13, 11, 1, (20, 3, 2), (21, 4, 2), (23, 3, 2)),
)


@dataclass(frozen=True)
class CartesianRow:
    """A Cartesian product comparison row for q = 3 (s = 5, padded to 27).

    `kind` is "general" (arguments delta1 = d_z, delta2 = d_x of the reference)
    or "plane" (argument l of the reference).
    """

    kind: str
    s: int
    m: int
    reference: Triple
    dz_max: Triple
    ell_max: Triple


CARTESIAN_Q3 = (
    CartesianRow("plane", 5, 2, (1, 16, 4), (1, 20, 4), (4, 16, 4)),
    CartesianRow("plane", 5, 4, (1, 9, 9), (1, 13, 9), (5, 9, 9)),
    CartesianRow("plane", 5, 1, (2, 20, 2), (2, 23, 2), (4, 20, 2)),
    CartesianRow("plane", 5, 3, (2, 12, 6), (2, 16, 6), (6, 12, 6)),
    CartesianRow("plane", 5, 2, (3, 15, 3), (3, 19, 3), (7, 15, 3)),
    CartesianRow("plane", 5, 4, (3, 8, 8), (3, 12, 8), (7, 8, 8)),
    CartesianRow("plane", 5, 3, (4, 10, 4), (4, 16, 4), (10, 10, 4)),
    CartesianRow("general", 5, 2, (5, 7, 1), (5, 19, 2), (17, 7, 2)),
    CartesianRow("plane", 5, 4, (5, 5, 5), (5, 13, 6), (13, 6, 6)),
    CartesianRow("general", 5, 2, (7, 6, 1), (7, 17, 2), (19, 6, 2)),
    CartesianRow("general", 5, 2, (7, 4, 2), (7, 17, 2), (21, 4, 2)),
    CartesianRow("general", 5, 2, (7, 3, 3), (7, 15, 3), (21, 3, 3)),
    CartesianRow("general", 5, 2, (8, 5, 1), (8, 16, 2), (19, 6, 2)),
    CartesianRow("general", 5, 2, (9, 3, 2), (9, 15, 2), (23, 3, 2)),
    CartesianRow("general", 5, 2, (10, 4, 1), (10, 14, 2), (21, 4, 2)),
    CartesianRow("general", 5, 2, (11, 2, 2), (11, 13, 2), (25, 2, 2)),
    CartesianRow("general", 5, 2, (12, 3, 1), (12, 12, 2), (23, 3, 2)),
    CartesianRow("general", 5, 2, (14, 2, 1), (14, 10, 2), (25, 2, 2)),
    CartesianRow("general", 5, 2, (17, 1, 1), (17, 7, 2), (25, 2, 2)),
)

# Lower small-codimension pairs: (i, j) -> (l, d_z, d_x)
SMALL_CODIM = {
    3: {
        (2, 2): (1, 13, 9),
        (1, 1): (1, 20, 4),
        (1, 2): (2, 16, 6),
        (0, 1): (2, 23, 2),
        (0, 2): (3, 19, 3),
    },
    4: {
        (3, 3): (1, 37, 16),
        (2, 2): (1, 46, 9),
        (1, 1): (1, 55, 4),
        (2, 3): (2, 41, 12),
        (1, 2): (2, 50, 6),
        (0, 1): (2, 59, 2),
        (1, 3): (3, 45, 8),
        (0, 2): (3, 54, 3),
        (0, 3): (4, 49, 4),
    },
    5: {
        (4, 4): (1, 81, 25),
        (3, 3): (1, 92, 16),
        (2, 2): (1, 103, 9),
        (1, 1): (1, 114, 4),
        (3, 4): (2, 86, 20),
        (2, 3): (2, 97, 12),
        (1, 2): (2, 108, 6),
        (0, 1): (2, 119, 2),
        (2, 4): (3, 91, 15),
        (1, 3): (3, 102, 8),
        (0, 2): (3, 113, 3),
        (1, 4): (4, 96, 10),
        (0, 3): (4, 107, 4),
        (0, 4): (5, 101, 5),
    },
}

# Length 8 codes over GF(4) matched by improved pairs: (delta1, delta2) -> (l, d_z, d_x)
MATCHED_Q2 = {
    (4, 3): (1, 4, 3),
    (5, 2): (2, 5, 2),
    (3, 3): (2, 3, 3),
    (4, 2): (3, 4, 2),
    (3, 2): (4, 3, 2),
}

# Improved codes beating tabulated distances: q -> {delta: dimension}
IMPROVED_DIMENSIONS = {
    4: {12: 48, 9: 51, 8: 53},
    5: {20: 97, 16: 101, 12: 106, 15: 103},
}
