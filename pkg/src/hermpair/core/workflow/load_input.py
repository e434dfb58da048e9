#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Input files holding default settings for hermpair commands.

An input file is YAML or JSON with a single `settings` mapping, for example

    settings:
      q: 3
      budget: 1000000
      np: 4
"""

import os
import json
import warnings

import yaml

from hermpair.core.files import FORMATS

SETTINGS_KEYS = ("budget", "np", "seed", "format", "q")
POSITIVE_KEYS = ("budget", "np", "q")
FILETYPES = {".yaml": "yaml", ".yml": "yaml", ".json": "json"}


def _check_setting(key, value):
    if value is None:
        return
    if key == "format":
        if value not in FORMATS:
            raise ValueError(f'setting "format" must be one of {FORMATS}, got "{value}"')
        return
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f'setting "{key}" must be an integer, got {value!r}')
    if key in POSITIVE_KEYS and value < 1:
        raise ValueError(f'setting "{key}" must be positive, got {value}')


def validate_required_input_keys(settings):
    """Validates the contents of a hermpair input file

    Unknown keys inside `settings` are kept but reported with a warning, since
    commands only read the keys they define options for.

    Args:
        settings: (dict) input file contents

    Returns:
        (dict) the contents with a "settings" block guaranteed
    """
    if settings is None:
        settings = {}
    if not isinstance(settings, dict):
        raise ValueError("hermpair input files must contain a mapping")
    block = settings.get("settings")
    if block is None:
        block = settings["settings"] = {}
    if not isinstance(block, dict):
        raise ValueError('"settings" in a hermpair input file must be a mapping')
    unknown = sorted(set(block) - set(SETTINGS_KEYS))
    if unknown:
        warnings.warn(f"Ignoring unknown settings in input file: {', '.join(unknown)}")
    for key in SETTINGS_KEYS:
        _check_setting(key, block.get(key))
    return settings


def get_validated_input_filetype(filename):
    """Returns "yaml" or "json" for an input file name, raising for anything else"""
    suffix = os.path.splitext(filename)[1].lower()
    if suffix not in FILETYPES:
        raise ValueError(
            f'Unsupported input file type "{suffix}".'
            " Accepted input file formats are:"
            '\n- ".yaml" or ".yml"'
            '\n- ".json"'
        )
    return FILETYPES[suffix]


def load_input(filename):
    """Load and validate an input file

    Args:
        filename: path to the input file

    Returns:
        dictionary with a validated "settings" block
    """

    filetype = get_validated_input_filetype(filename)
    with open(filename, "r", encoding="utf-8") as f:
        contents = yaml.safe_load(f) if filetype == "yaml" else json.load(f)
    return validate_required_input_keys(contents)


def write_input(settings, filename):
    """Write validated input file contents as YAML or JSON"""

    settings = validate_required_input_keys(settings)
    filetype = get_validated_input_filetype(filename)
    with open(filename, "w", encoding="utf-8") as f:
        if filetype == "yaml":
            yaml.safe_dump(settings, f, sort_keys=False, default_flow_style=False)
        else:
            json.dump(settings, f, sort_keys=False, indent=2)
