#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Weierstrass semigroup of the Hermitian curve and the order bounds sigma, mu."""

from .semigroup import (
    SUPPORTED_Q,
    SemigroupElement,
    achievable_deltas,
    check_q,
    code_length,
    compose,
    decompose,
    gaps,
    genus,
    h_of_q_contains,
    h_star,
    h_star_element,
    h_star_values,
    mirror,
    mu_formula,
    mu_oracle,
    round_up_delta,
    sigma_formula,
    sigma_oracle,
)
from .lemmas import LemmaReport, LemmaResult, verify_order_bound_lemmas

__all__ = [
    "SUPPORTED_Q",
    "LemmaReport",
    "LemmaResult",
    "SemigroupElement",
    "achievable_deltas",
    "check_q",
    "code_length",
    "compose",
    "decompose",
    "gaps",
    "genus",
    "h_of_q_contains",
    "h_star",
    "h_star_element",
    "h_star_values",
    "mirror",
    "mu_formula",
    "mu_oracle",
    "round_up_delta",
    "sigma_formula",
    "sigma_oracle",
    "verify_order_bound_lemmas",
]
