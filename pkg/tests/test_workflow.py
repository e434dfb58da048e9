#
# Copyright (c) Oak Ridge National Laboratory.
#
# This file is part of hermpair. For details, see the top-level license
# in LICENSE.md.
#
# License: 3-clause BSD, see https://opensource.org/licenses/BSD-3-Clause.
#
import argparse

import pytest

from hermpair.core.context import get_budget, get_seed, get_workers, run_context
from hermpair.core.files import DocumentPairs, DocumentReport, OutputDocument
from hermpair.core.workflow._argument_registrar import _ArgumentRegistrar
from hermpair.core.workflow.load_input import (
    get_validated_input_filetype,
    load_input,
    write_input,
)
from hermpair.core.workflow.pairs import pairs_document
from hermpair.core.workflow.semigroup import semigroup_document


def test_registrar_accepts_identical_repeats():
    parser = argparse.ArgumentParser()
    registrar = _ArgumentRegistrar(parser)
    first = registrar.register("--budget", type=int, help="budget")
    second = registrar.register("--budget", type=int, help="other help text")
    assert first is second
    with pytest.raises(ValueError, match="Conflicting argument registration for --budget"):
        registrar.register("--budget", type=str)


def test_run_context_nesting(monkeypatch):
    monkeypatch.delenv("HERMPAIR_BUDGET", raising=False)
    monkeypatch.delenv("HERMPAIR_WORKERS", raising=False)
    assert get_budget() == 2**26
    assert get_workers() == 1
    assert get_seed() is None
    with run_context(budget=100, seed=3):
        with run_context(workers=2):
            assert (get_budget(), get_workers(), get_seed()) == (100, 2, 3)
        assert get_budget(5) == 5
    assert get_budget() == 2**26


def test_environment_settings(monkeypatch):
    monkeypatch.setenv("HERMPAIR_BUDGET", "1000")
    monkeypatch.setenv("HERMPAIR_WORKERS", "4")
    assert get_budget() == 1000
    assert get_workers() == 4
    monkeypatch.setenv("HERMPAIR_BUDGET", "lots")
    with pytest.raises(ValueError, match="HERMPAIR_BUDGET"):
        get_budget()
    with pytest.raises(ValueError):
        get_workers(0)


def test_input_files(tmp_path):
    for name in ("run.yaml", "run.json"):
        path = tmp_path / name
        write_input({"settings": {"q": 3, "budget": 10}}, path)
        assert load_input(path)["settings"] == {"q": 3, "budget": 10}
    path = tmp_path / "odd.yaml"
    path.write_text("settings:\n  colour: blue\n")
    with pytest.warns(UserWarning, match="colour"):
        load_input(path)
    with pytest.raises(ValueError, match="Unsupported input file type"):
        get_validated_input_filetype("run.toml")


@pytest.mark.parametrize(
    "text, message",
    [
        ("settings:\n  q: three\n", '"q" must be an integer'),
        ("settings:\n  budget: 0\n", '"budget" must be positive'),
        ("settings:\n  format: xml\n", '"format" must be one of'),
        ("settings: [1, 2]\n", "must be a mapping"),
    ],
)
def test_input_file_rejects_bad_settings(tmp_path, text, message):
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(ValueError, match=message):
        load_input(path)


def test_document_formats(tmp_path):
    document = semigroup_document(2)
    assert document.columns == ["j", "i", "lambda", "sigma", "mu"]
    assert document.to_csv().splitlines()[0] == "j,i,lambda,sigma,mu"
    assert document.render("markdown").startswith("## semigroup")
    assert document.write(str(tmp_path / "h.json")).endswith("h.json")
    assert '"command": "semigroup"' in (tmp_path / "h.json").read_text()
    with pytest.raises(ValueError, match="Unsupported output file type"):
        document.write(str(tmp_path / "h.xlsx"))
    with pytest.raises(ValueError, match="Unsupported output format"):
        document.render("xml")


def test_document_rows_must_match_columns(capsys):
    document = DocumentPairs([("lower", "(0, 0)", 8)])
    with pytest.raises(ValueError, match="do not match"):
        document.to_csv()
    assert "WARNING" in capsys.readouterr().out
    assert isinstance(document, OutputDocument)


def test_report_failed_rows():
    report = DocumentReport(
        [("dims", "bound<=exact", "PASS", 3, ""), ("lemmas", "sigma-step", "FAIL", 4, "x")]
    )
    assert [row[1] for row in report.failed] == ["sigma-step"]


def test_pairs_document_best_row():
    document = pairs_document(3, objective="ell", min_dz=12, min_dx=2)
    assert len(document.rows) == 1
    assert document.rows[0][-1] == "[[27,12,12/2]]_9"
    assert document.metadata["objective"] == "ell"
