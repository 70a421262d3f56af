# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Testing module for cavitycool report command"""

import pathlib

import pytest
from click.testing import CliRunner

from cavitycool.cli.commands.report import report_cmd
from tests.testutils import BAD_VALUE_CONFIG, UNKNOWN_KEY_CONFIG, VALID_CONFIG, read_json


def test_report_json(tmp_path_dir: pathlib.Path) -> None:
    """Test the JSON report carries every section."""
    out = tmp_path_dir / "report.json"
    runner = CliRunner()
    result = runner.invoke(
        report_cmd, ["--config", str(VALID_CONFIG), "--json", "-o", str(out)]
    )
    assert result.exit_code == 0

    document = read_json(out)
    assert document["schema_version"] == 1
    assert "provenance" in document
    data = document["data"]
    assert set(data) == {
        "transition",
        "cavity",
        "confocal",
        "rates",
        "rate_metadata",
        "photon_budget",
    }
    assert data["transition"]["name"] == "P1(1)"
    assert data["rates"]["s"] == pytest.approx(0.01, rel=1e-6)
    # delta_pc defaults to -kappa, where the rate ratio equals C
    assert data["rates"]["ratio_C"] == pytest.approx(data["photon_budget"]["cooperativity"])


def test_report_cavity_alias(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "report.json"
    result = CliRunner().invoke(
        report_cmd, ["--cavity", str(VALID_CONFIG), "--json", "-o", str(out)]
    )
    assert result.exit_code == 0
    assert read_json(out)["data"]["confocal"]["radius"] == pytest.approx(0.1)


def test_report_text(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "report.txt"
    result = CliRunner().invoke(report_cmd, ["--config", str(VALID_CONFIG), "-o", str(out)])
    assert result.exit_code == 0
    text = out.read_text()
    assert "[transition]" in text
    assert "[photon_budget]" in text


def test_report_other_transition(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "report.json"
    result = CliRunner().invoke(
        report_cmd,
        ["--config", str(VALID_CONFIG), "--transition", "Q1(1)", "--json", "-o", str(out)],
    )
    assert result.exit_code == 0
    assert read_json(out)["data"]["transition"]["name"] == "Q1(1)"


def test_report_unknown_transition() -> None:
    """Test an unknown line is a config error."""
    result = CliRunner().invoke(
        report_cmd, ["--config", str(VALID_CONFIG), "--transition", "X9(9)"]
    )
    assert result.exit_code == 2


@pytest.mark.parametrize("config", [BAD_VALUE_CONFIG, UNKNOWN_KEY_CONFIG])
def test_report_bad_config(config: pathlib.Path) -> None:
    result = CliRunner().invoke(report_cmd, ["--config", str(config)])
    assert result.exit_code == 2


def test_report_missing_explicit_config(tmp_path_dir: pathlib.Path) -> None:
    result = CliRunner().invoke(report_cmd, ["--config", str(tmp_path_dir / "absent.yml")])
    assert result.exit_code == 2
