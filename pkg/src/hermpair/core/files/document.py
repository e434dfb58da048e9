#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Base class for tabular command output"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version
import json
import os
from typing import Literal

import polars as pl

Format = Literal["csv", "markdown", "json"]
FORMATS = ("csv", "markdown", "json")
SUFFIXES = {".csv": "csv", ".md": "markdown", ".json": "json"}


def artifact_version() -> str:
    try:
        return version("hermpair")
    except PackageNotFoundError:
        return "unknown"


class Variable:
    """Column definition of an output document."""

    def __init__(self, name: str, dtype=pl.Int64, description: str = ""):
        """Initialize with column name and polars data type

        Args:
            name: column name string
            dtype: polars data type of the column (e.g. pl.Int64, pl.Utf8)
        """
        self.name = name
        self.dtype = dtype
        self.description = description


class OutputDocument:
    """Rows of a command result plus the metadata needed to reproduce them."""

    def __init__(self, rows=None, **metadata):
        self.variables = []
        self.rows = [] if rows is None else list(rows)
        self.metadata = dict(metadata)
        self.metadata.setdefault("version", artifact_version())

    @property
    def columns(self) -> list[str]:
        return [x.name for x in self.variables]

    def columns_are_valid(self) -> bool:
        """Check that every row has one value per column."""

        for number, row in enumerate(self.rows):
            if len(row) != len(self.variables):
                print(
                    f"\nWARNING: row {number} has {len(row)} values,"
                    f" expected {len(self.variables)}:"
                )
                print(", ".join(self.columns))
                return False
        return True

    def to_frame(self) -> pl.DataFrame:
        if not self.columns_are_valid():
            raise ValueError(f"{self.__class__.__name__} rows do not match its columns")
        schema = {x.name: x.dtype for x in self.variables}
        return pl.DataFrame(self.rows, schema=schema, orient="row")

    def to_csv(self) -> str:
        return self.to_frame().write_csv()

    def to_markdown(self) -> str:
        with pl.Config(
            tbl_formatting="MARKDOWN",
            tbl_hide_column_data_types=True,
            tbl_hide_dataframe_shape=True,
            tbl_rows=-1,
            tbl_cols=-1,
            tbl_width_chars=10_000,
            fmt_str_lengths=10_000,
        ):
            table = str(self.to_frame())
        title = self.metadata.get("command", self.__class__.__name__)
        return f"## {title}\n\n{table}\n"

    def to_json(self) -> str:
        frame = self.to_frame()
        return json.dumps(
            {
                "metadata": self.metadata,
                "columns": [
                    {"name": x.name, "type": str(x.dtype), "description": x.description}
                    for x in self.variables
                ],
                "rows": frame.rows(named=True),
            },
            indent=2,
            sort_keys=False,
        )

    def render(self, fmt: Format = "csv") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "markdown":
            return self.to_markdown()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f'Unsupported output format "{fmt}", use one of {FORMATS}')

    def write(self, filename, fmt: Format | None = None) -> str:
        """Write to `filename`, inferring the format from its suffix if needed."""

        if fmt is None:
            suffix = os.path.splitext(filename)[1].lower()
            if suffix not in SUFFIXES:
                raise ValueError(
                    f'Unsupported output file type "{suffix}".'
                    " Accepted output file formats are:"
                    '\n- ".csv"\n- ".md"\n- ".json"'
                )
            fmt = SUFFIXES[suffix]
        with open(filename, "w", encoding="utf-8") as f:
            f.write(self.render(fmt))
        return filename
