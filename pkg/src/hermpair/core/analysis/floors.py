#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Floors and ceilings of logarithmic expressions by interval arithmetic.

Expressions are evaluated with `mpmath.iv` (outward rounded intervals). When
the enclosing interval still contains an integer boundary the working precision
is doubled and the expression evaluated again.
"""

import threading

from mpmath import iv
from mpmath.libmp import round_ceiling, round_floor, to_int

START_PRECISION = 53
MAX_PRECISION = 1 << 14

_IV_LOCK = threading.Lock()


def _resolve(expression, rounding) -> int:
    with _IV_LOCK:
        saved = iv.prec
        precision = START_PRECISION
        try:
            while True:
                iv.prec = precision
                value = expression(iv)
                lower, upper = value._mpi_
                low, high = to_int(lower, rounding), to_int(upper, rounding)
                if low == high:
                    return low
                if precision >= MAX_PRECISION:
                    raise ArithmeticError(
                        f"cannot resolve rounding of {value} at {precision} bits"
                    )
                precision *= 2
        finally:
            iv.prec = saved


def interval_floor(expression) -> int:
    """floor(expression(ctx)) for a callable building an `mpmath.iv` value."""

    return _resolve(expression, round_floor)


def interval_ceil(expression) -> int:
    return _resolve(expression, round_ceiling)


def floor_delta_log(delta: int) -> int:
    """floor(delta + delta ln(delta))."""

    delta = int(delta)
    if delta == 1:
        return 1
    return interval_floor(lambda ctx: ctx.mpf(delta) * (1 + ctx.log(delta)))


def floor_delta_log_ratio(q: int, delta: int) -> int:
    """floor(delta + delta ln(q^2 / delta))."""

    delta = int(delta)
    if delta == q * q:
        return delta
    return interval_floor(
        lambda ctx: ctx.mpf(delta) * (1 + ctx.log(q * q) - ctx.log(delta))
    )
