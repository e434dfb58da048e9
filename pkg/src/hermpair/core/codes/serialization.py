#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Plain-text generator matrices.

The header line is `q n k descriptor`, followed by k rows of n space separated
decimal element indices.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from hermpair.core.curve import CurveContext, curve_create
from hermpair.core.errors import LengthMismatch

from .linear_code import LinearCode, code_from_rows, parse_descriptor


def format_matrix(code: LinearCode) -> str:
    lines = [f"{code.q} {code.n} {code.k} {code.descriptor.label}"]
    for row in code.generator.view(np.ndarray):
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, ctx: CurveContext | None = None) -> LinearCode:
    """Inverse of `format_matrix`; rows are canonicalized again on load."""

    lines = [line for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 4:
        raise ValueError(f'malformed matrix header "{lines[0]}"')
    q, n, k = (int(x) for x in header[:3])
    descriptor = parse_descriptor(header[3])
    if ctx is None:
        ctx = curve_create(q)
    if ctx.q != q or ctx.n != n:
        raise LengthMismatch(f"matrix for q={q}, n={n} does not fit q={ctx.q}")
    rows = [[int(x) for x in line.split()] for line in lines[1:]]
    if len(rows) != k:
        raise ValueError(f"header announces {k} rows, found {len(rows)}")
    for row in rows:
        if len(row) != n:
            raise LengthMismatch(f"row of length {len(row)} in a code of length {n}")
        if any(not 0 <= x < ctx.field.order for x in row):
            raise ValueError(f"entries must be field indices below {ctx.field.order}")
    code = code_from_rows(ctx, rows if rows else np.zeros((0, n)), descriptor)
    if code.k != k:
        raise ValueError(f"rows have rank {code.k}, header announces {k}")
    return code


def write_matrix(code: LinearCode, path) -> Path:
    path = Path(path)
    path.write_text(format_matrix(code))
    return path


def read_matrix(path, ctx: CurveContext | None = None) -> LinearCode:
    return parse_matrix(Path(path).read_text(), ctx)
