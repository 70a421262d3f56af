# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Testing module for cavitycool sweep command"""

import pathlib

from click.testing import CliRunner

from cavitycool.cli.commands.sweep import sweep_cmd
from cavitycool.multimode import SWEEP_COLUMNS
from tests.testutils import VALID_CONFIG, read_csv


def test_sweep(tmp_path_dir: pathlib.Path) -> None:
    """Test a small grid is written ranked by figure of merit."""
    out = tmp_path_dir / "sweep.csv"
    result = CliRunner().invoke(
        sweep_cmd,
        [
            "--config",
            str(VALID_CONFIG),
            "--f-grid",
            "1000:5000:3",
            "--r-grid",
            "0.02:0.1:2",
            "-o",
            str(out),
        ],
    )
    assert result.exit_code == 0

    rows = read_csv(out)
    assert len(rows) == 6
    assert list(rows[0].keys()) == SWEEP_COLUMNS
    merits = [float(row["fom_m2"]) for row in rows]
    assert merits == sorted(merits, reverse=True)


def test_sweep_degradation(tmp_path_dir: pathlib.Path) -> None:
    full = tmp_path_dir / "full.csv"
    half = tmp_path_dir / "half.csv"
    args = ["--config", str(VALID_CONFIG), "--f-grid", "5000", "--r-grid", "0.02"]
    runner = CliRunner()
    assert runner.invoke(sweep_cmd, args + ["--degradation", "1", "-o", str(full)]).exit_code == 0
    assert runner.invoke(sweep_cmd, args + ["--degradation", "0.5", "-o", str(half)]).exit_code == 0

    c_full = float(read_csv(full)[0]["c_sa"])
    c_half = float(read_csv(half)[0]["c_sa"])
    assert abs(c_half - 0.5 * c_full) < 1e-9 * c_full


def test_sweep_bad_grid() -> None:
    result = CliRunner().invoke(
        sweep_cmd, ["--config", str(VALID_CONFIG), "--f-grid", "1:2", "--r-grid", "0.02"]
    )
    assert result.exit_code == 2


def test_sweep_requires_grids() -> None:
    result = CliRunner().invoke(sweep_cmd, ["--config", str(VALID_CONFIG), "--f-grid", "1000"])
    assert result.exit_code == 2
