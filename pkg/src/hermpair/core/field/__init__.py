#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Finite field arithmetic for GF(q^2) and its subfield GF(q)."""

from .field import (
    MAX_FIELD_ORDER,
    FieldElement,
    FieldSpec,
    add,
    field_create,
    field_for_q,
    in_subfield,
    inv,
    mul,
    neg,
    norm_to_subfield,
    power,
    trace_to_subfield,
)

__all__ = [
    "MAX_FIELD_ORDER",
    "FieldElement",
    "FieldSpec",
    "add",
    "field_create",
    "field_for_q",
    "in_subfield",
    "inv",
    "mul",
    "neg",
    "norm_to_subfield",
    "power",
    "trace_to_subfield",
]
