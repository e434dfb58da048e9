#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Ramp secret sharing: dealer, reconstruction and exact audit."""

from .scheme import (
    DealerSpec,
    Randomness,
    ShareBundle,
    Undetermined,
    deal,
    dealer_spec,
    draw_coefficients,
    reconstruct,
)
from .audit import (
    PrivacyCheck,
    exact_privacy_number,
    exact_reconstruction_number,
    information_gain,
    perfect_privacy_check,
)
from .files import (
    format_shares,
    parse_shares,
    read_scheme,
    read_secret,
    read_shares,
    scheme_from_dict,
    scheme_to_dict,
    write_scheme,
    write_secret,
    write_shares,
)

__all__ = [
    "DealerSpec",
    "PrivacyCheck",
    "Randomness",
    "ShareBundle",
    "Undetermined",
    "deal",
    "dealer_spec",
    "draw_coefficients",
    "exact_privacy_number",
    "exact_reconstruction_number",
    "format_shares",
    "information_gain",
    "parse_shares",
    "perfect_privacy_check",
    "read_scheme",
    "read_secret",
    "read_shares",
    "reconstruct",
    "scheme_from_dict",
    "scheme_to_dict",
    "write_scheme",
    "write_secret",
    "write_shares",
]
