#!/usr/bin/env python

"""Tests for `recfan.checklist`, `recfan.logs` and `recfan.store`."""

import json

from rich.console import Console

from recfan.checklist import CheckList, complex_check
from recfan.logs import LOGGER, LocalLogger, SilentLogger, logger_factory
from recfan.store import STORE, LocalStore, StdoutStore, store_factory


class DimensionCheckList(CheckList):

    def __init__(self, dim, **kwargs):
        self.dim = dim
        super().__init__(**kwargs)

    @complex_check(check_type="second", order=2)
    def check_even(self):
        """
        Dimension is even
        """
        return self.dim % 2 == 0

    @complex_check(check_type="first", order=1)
    def check_positive(self):
        """
        Dimension is positive
        """
        return self.dim > 0

    @complex_check(check_type="undocumented", order=3)
    def check_square(self):
        return {"square": self.dim * self.dim}


def test_checks_run_in_order():
    """
    Testing checks are collected by decorator and run by order
    """
    checks = DimensionCheckList(3)
    results = checks()
    assert [_["name"] for _ in results] == ["first", "second", "undocumented"]
    assert [_["result"] for _ in results] == [True, False, {"square": 9}]
    assert results[0]["description"] == "Dimension is positive"
    assert results[2]["description"] == ""
    assert checks.name == "DimensionCheckList"
    # calling again does not pile up results
    assert len(checks()) == 3


def test_display_renders_a_table():
    """
    Testing the rich summary table
    """
    checks = DimensionCheckList(4)
    checks()
    console = Console(record=True, width=120)
    checks.display(console=console)
    text = console.export_text()
    assert "DimensionCheckList" in text
    assert "Dimension is even" in text


def test_logger_factory(capsys):
    """
    Testing logger selection and output to stderr
    """
    assert logger_factory(LOGGER.LOCAL) is LocalLogger
    assert logger_factory(LOGGER.SILENT) is SilentLogger
    LocalLogger().write("connected", True)
    SilentLogger().write("connected", False)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "connected" in captured.err and "True" in captured.err
    assert "False" not in captured.err

    checks = DimensionCheckList(2, logger=LOGGER.LOCAL)
    checks()
    assert "second" in capsys.readouterr().err


def test_local_store(tmp_path):
    """
    Testing reports are written with parent folders and a trailing newline
    """
    assert store_factory(STORE.LOCAL) is LocalStore
    path = tmp_path / "nested" / "report.json"
    LocalStore().write_file(str(path), {"status": 0}, is_json=True)
    assert path.read_text() == json.dumps({"status": 0}, indent=2) + "\n"


def test_stdout_store(capsys):
    """
    Testing reports written to standard output
    """
    assert store_factory(STORE.STDOUT) is StdoutStore
    StdoutStore().write_file(None, {"b": [1, 2]}, is_json=True)
    assert json.loads(capsys.readouterr().out) == {"b": [1, 2]}
