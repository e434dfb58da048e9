#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
"""Scheme, share and secret files.

A scheme file is YAML with the generator matrices of C1 and C2 in the plain
matrix text format and the extension rows. Share files hold one
`index:element_index` line per share; secret files hold element indices
separated by whitespace.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import yaml

from hermpair.core.codes import make_pair, parse_matrix, format_matrix
from hermpair.core.curve import curve_create
from hermpair.core.errors import InconsistentShares, LengthMismatch

from .scheme import DealerSpec, ShareBundle


def scheme_to_dict(spec: DealerSpec) -> dict:
    extension = "\n".join(
        " ".join(str(int(x)) for x in row) for row in spec.extension.view(np.ndarray)
    )
    return {
        "scheme": spec.scheme_id,
        "q": spec.pair.q,
        "n": spec.n,
        "ell": spec.ell,
        "randomness": spec.randomness,
        "construction": spec.pair.construction,
        "c1": format_matrix(spec.pair.c1),
        "c2": format_matrix(spec.pair.c2),
        "extension": extension + "\n",
    }


def scheme_from_dict(data: dict) -> DealerSpec:
    ctx = curve_create(int(data["q"]))
    c1 = parse_matrix(data["c1"], ctx)
    c2 = parse_matrix(data["c2"], ctx)
    pair = make_pair(c1, c2, construction=data.get("construction", ""))
    rows = [
        [int(x) for x in line.split()]
        for line in str(data.get("extension", "")).splitlines()
        if line.strip()
    ]
    for row in rows:
        if len(row) != ctx.n:
            raise LengthMismatch(f"extension row of length {len(row)}, expected {ctx.n}")
    GF = ctx.field.GF
    extension = GF(np.asarray(rows, dtype=np.int64).reshape(-1, ctx.n))
    spec = DealerSpec(
        pair=pair, extension=extension, randomness=data.get("randomness", "seeded")
    )
    expected = data.get("scheme")
    if expected and expected != spec.scheme_id:
        raise ValueError(
            f"scheme file names id {expected} but its matrices hash to {spec.scheme_id}"
        )
    return spec


def write_scheme(spec: DealerSpec, path) -> Path:
    path = Path(path)
    with open(path, "w") as f:
        yaml.dump(scheme_to_dict(spec), f, default_flow_style=False, sort_keys=False)
    return path


def read_scheme(path) -> DealerSpec:
    with open(path) as f:
        return scheme_from_dict(yaml.safe_load(f))


def format_shares(bundle: ShareBundle) -> str:
    lines = [f"# scheme {bundle.scheme_id}"] if bundle.scheme_id else []
    lines += [f"{i}:{bundle.shares[i]}" for i in bundle.indices]
    return "\n".join(lines) + "\n"


def parse_shares(text: str) -> ShareBundle:
    scheme_id = ""
    shares = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] == "scheme":
                scheme_id = words[1]
            continue
        index, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f'line {number}: expected "index:element_index", got "{line}"')
        index = int(index)
        if index in shares:
            raise InconsistentShares(f"line {number}: participant {index} appears twice")
        shares[index] = int(value)
    return ShareBundle(shares, scheme_id)


def write_shares(bundle: ShareBundle, path) -> Path:
    path = Path(path)
    path.write_text(format_shares(bundle))
    return path


def read_shares(path) -> ShareBundle:
    return parse_shares(Path(path).read_text())


def write_secret(secret, path) -> Path:
    path = Path(path)
    path.write_text(" ".join(str(int(x)) for x in secret) + "\n")
    return path


def read_secret(path) -> tuple[int, ...]:
    return tuple(int(x) for x in Path(path).read_text().split())
