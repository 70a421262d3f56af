# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Testing module for cavitycool threshold command"""

import pathlib

import pytest
from click.testing import CliRunner

from cavitycool.cli.commands.threshold import threshold_cmd
from tests.testutils import VALID_CONFIG, read_json, write_config


def test_threshold_defaults(tmp_path_dir: pathlib.Path) -> None:
    """Test the built-in defaults when no config file is present."""
    runner = CliRunner()
    with runner.isolated_filesystem(temp_dir=tmp_path_dir):
        result = runner.invoke(threshold_cmd, ["-o", "threshold.json"])
        assert result.exit_code == 0
        data = read_json(pathlib.Path("threshold.json"))["data"]

    assert set(data) == {"inputs", "coupling", "thresholds"}
    assert data["inputs"]["transition"] == "P1(1)"
    thresholds = data["thresholds"]
    assert thresholds["n0_x2"] == pytest.approx(8469.7, rel=1e-3)
    assert thresholds["n0_x4"] == pytest.approx(thresholds["n0_x2"] ** 2, rel=1e-9)
    assert thresholds["s_at_pump"] == pytest.approx(0.0025, rel=1e-3)


def test_threshold_from_config(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "threshold.json"
    result = CliRunner().invoke(threshold_cmd, ["--config", str(VALID_CONFIG), "-o", str(out)])
    assert result.exit_code == 0
    data = read_json(out)["data"]
    assert data["inputs"]["n_particles"] == 10000
    assert data["coupling"]["u0_hz"] < 0


def test_threshold_domain_error(tmp_path_dir: pathlib.Path) -> None:
    config = write_config(tmp_path_dir, {"drive": {"g_hz": 0.0}})
    result = CliRunner().invoke(threshold_cmd, ["--config", str(config)])
    assert result.exit_code == 2
