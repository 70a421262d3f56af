# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Testing module for cavitycool zones command"""

import pathlib

from click.testing import CliRunner

from cavitycool.cli.commands.zones import zones_cmd
from tests.testutils import read_json


def test_zones(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "zones.json"
    result = CliRunner().invoke(zones_cmd, ["-o", str(out)])
    assert result.exit_code == 0

    document = read_json(out)
    assert [entry["zone"] for entry in document["data"]] == ["I", "II", "III", "IV"]
    assert len(document["warnings"]) == 1


def test_single_zone(tmp_path_dir: pathlib.Path) -> None:
    out = tmp_path_dir / "zone.json"
    result = CliRunner().invoke(zones_cmd, ["--zone", "II", "-o", str(out)])
    assert result.exit_code == 0

    data = read_json(out)["data"]
    assert data == [
        {
            "zone": "II",
            "density_per_cm3": 1e7,
            "velocity_m_s": 100.0,
            "description": data[0]["description"],
        }
    ]


def test_unknown_zone() -> None:
    result = CliRunner().invoke(zones_cmd, ["--zone", "V"])
    assert result.exit_code == 2
