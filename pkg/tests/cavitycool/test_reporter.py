# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Test for general reporting logic"""

import json
import pathlib
from unittest.mock import patch

import numpy as np
import pytest

from cavitycool import const
from cavitycool.reporter import CSVBuilder, ResultsReporter, format_value, json_document
from cavitycool.selforg import Parity


def test_format_value() -> None:
    assert format_value(True) == "true"
    assert format_value(0.1 + 0.2) == "0.3"
    assert format_value(np.float64(1e-20)) == "1e-20"
    assert format_value(Parity.EVEN) == "even"
    assert format_value(None) == ""
    assert format_value(3) == 3


def test_csv_builder() -> None:
    builder = CSVBuilder(["a", "b"])
    builder.add_rows([{"a": 1.5, "b": "x"}, {"a": 2, "b": None}])
    assert builder.row_count == 2
    assert builder.to_string() == "a,b\n1.5,x\n2,\n"


def test_csv_builder_missing_key() -> None:
    builder = CSVBuilder(["a", "b"])
    with pytest.raises(RuntimeError, match="Row missing key: b"):
        builder.add_row({"a": 1})


def test_csv_builder_extra_key() -> None:
    builder = CSVBuilder(["a"])
    with pytest.raises(RuntimeError, match="Row has extra key: c"):
        builder.add_row({"a": 1, "c": 2})


def test_csv_builder_from_rows(tmp_path_dir: pathlib.Path) -> None:
    builder = CSVBuilder.from_rows([{"z": 1, "y": 2}])
    assert builder.fieldnames == ["z", "y"]
    path = tmp_path_dir / "nested" / "out.csv"
    builder.write_to_file(path)
    assert path.read_text(encoding="utf-8") == "z,y\n1,2\n"
    with pytest.raises(RuntimeError):
        CSVBuilder.from_rows([])


def test_json_document() -> None:
    """Test the versioned envelope and special value encoding."""
    text = json_document({"alpha": 1 + 2j, "grid": np.array([1.0, 2.0])}, warnings=["careful"])
    assert text.endswith("\n")
    document = json.loads(text)
    assert document["schema_version"] == const.SCHEMA_VERSION
    assert document["units"] == const.UNIT_CONVENTIONS
    assert "provenance" in document
    assert document["data"]["alpha"] == {"re": 1.0, "im": 2.0}
    assert document["data"]["grid"] == [1.0, 2.0]
    assert document["warnings"] == ["careful"]
    assert "warnings" not in json.loads(json_document({}))


def test_json_document_is_deterministic() -> None:
    assert json_document({"b": 1, "a": 2}) == json_document({"a": 2, "b": 1})


def test_results_reporter_text() -> None:
    """Test results reporter"""
    sections = {"cavity": {"kappa_hz": 7.5e5, "n": 3}}

    with patch("builtins.print") as mock_print:
        ResultsReporter().report_text(sections)
        mock_print.assert_called_once_with("[cavity]\n  kappa_hz  750000\n  n         3\n", end="")


def test_results_reporter_csv_to_stdout() -> None:
    builder = CSVBuilder(["a"])
    builder.add_row({"a": 1})

    with patch("builtins.print") as mock_print:
        ResultsReporter().report_csv(builder)
        mock_print.assert_called_once_with("a\n1\n", end="")


def test_results_reporter_to_file(tmp_path_dir: pathlib.Path) -> None:
    output = tmp_path_dir / "report.json"
    ResultsReporter(output).report_json({"x": 1})
    assert json.loads(output.read_text(encoding="utf-8"))["data"] == {"x": 1}
