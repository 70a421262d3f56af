# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Testing module for cavitycool oracle command"""

import pathlib

from click.testing import CliRunner

from cavitycool.cli.commands.oracle import oracle_cmd
from tests.testutils import SMALL_ENSEMBLE_CONFIG, read_csv, write_config


def test_oracle_compare(tmp_path_dir: pathlib.Path) -> None:
    """Test the semiclassical and master-equation steady states agree."""
    out = tmp_path_dir / "oracle.csv"
    result = CliRunner().invoke(
        oracle_cmd, ["--config", str(SMALL_ENSEMBLE_CONFIG), "-o", str(out)]
    )
    assert result.exit_code == 0

    rows = read_csv(out)
    assert len(rows) == 1
    row = rows[0]
    assert float(row["s"]) == 0.01
    assert float(row["alpha_rel_error"]) < 0.05
    assert float(row["sigma_ee_rel_error"]) < 0.05


def test_oracle_shelving(tmp_path_dir: pathlib.Path) -> None:
    config = write_config(tmp_path_dir, {"oracle": {"fock_cutoff": 4, "n_steps": 200}})
    out = tmp_path_dir / "shelving.csv"
    result = CliRunner().invoke(
        oracle_cmd, ["--config", str(config), "--shelving", "-o", str(out)]
    )
    assert result.exit_code == 0

    rows = read_csv(out)
    assert len(rows) == 201
    assert list(rows[0].keys()) == ["t", "p_ground", "p_excited", "p_shelved", "cavity_photons"]
    assert float(rows[0]["p_shelved"]) == 0.0
    assert float(rows[-1]["p_shelved"]) > 0.5


def test_oracle_shelving_without_pump(tmp_path_dir: pathlib.Path) -> None:
    config = write_config(tmp_path_dir, {"drive": {"omega_p_hz": 0.0}})
    result = CliRunner().invoke(oracle_cmd, ["--config", str(config), "--shelving"])
    assert result.exit_code == 2
