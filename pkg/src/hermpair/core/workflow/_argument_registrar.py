#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Private helper for idempotent argparse registration across commands."""


class _ArgumentRegistrar:
    """Register argparse options, accepting exact repeats and rejecting conflicts.

    Commands share options such as `--q` and `--budget`; a command may register
    a shared option again as long as the definition is identical.
    """

    _COMPARED = ("action", "nargs", "const", "default", "type", "required", "metavar")

    def __init__(self, parser):
        self.parser = parser
        self._registry = {}

    def _signature(self, name_or_flags, kwargs):
        options = tuple(sorted(x for x in name_or_flags if x.startswith("-")))
        positional = next((x for x in name_or_flags if not x.startswith("-")), None)
        if "dest" in kwargs:
            dest = kwargs["dest"]
        elif options:
            longs = [x for x in options if x.startswith("--")]
            dest = (longs[0] if longs else options[0]).lstrip("-").replace("-", "_")
        else:
            dest = positional
        signature = {"options": options, "dest": dest}
        for key in self._COMPARED:
            signature[key] = kwargs.get(key)
        choices = kwargs.get("choices")
        signature["choices"] = tuple(choices) if choices else None
        return signature

    def register(self, *name_or_flags, **kwargs):
        """Add an argument unless an identical one is already registered."""

        signature = self._signature(name_or_flags, kwargs)
        keys = [("option", x) for x in signature["options"]] or [
            ("dest", signature["dest"])
        ]
        known = {id(self._registry[k]): self._registry[k] for k in keys if k in self._registry}
        if known:
            entry = next(iter(known.values()))
            if len(known) == 1 and entry["signature"] == signature:
                return entry["action"]
            raise ValueError(
                f"Conflicting argument registration for {keys[0][1]}. "
                f"Existing signature: {entry['signature']}; new signature: {signature}."
            )
        action = self.parser.add_argument(*name_or_flags, **kwargs)
        entry = {"action": action, "signature": signature}
        for key in keys:
            self._registry[key] = entry
        return action
