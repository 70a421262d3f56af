# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Unit tests for CLI config module"""

import pathlib

import pytest
import yaml
from click.testing import CliRunner

from cavitycool.cli.commands.config import config_cmd
from cavitycool.cli.config import (
    CavityCoolConfig,
    CavityCoolConfigError,
    load_from_file,
    make_config,
    update_config,
    write_to_file,
)
from cavitycool.units import ModeKind
from tests.testutils import BAD_VALUE_CONFIG, UNKNOWN_KEY_CONFIG, VALID_CONFIG


@pytest.fixture
def config_obj() -> CavityCoolConfig:
    return make_config({"cavity": {"radius_m": 0.05, "finesse": 1e4}, "drive": {"saturation": 0.02}})


def test_default_config() -> None:
    config = make_config()
    assert config.schema_version == 1
    assert config.transition.name == "P1(1)"
    assert config.cavity.radius_m == 0.02
    assert config.cavity.finesse == 5000.0
    assert config.cavity.mode_kind == ModeKind.CONFOCAL_MULTIMODE
    assert config.drive.delta_pa_hz == -1e10


def test_invalid_config_raises_errors() -> None:
    """Test create config with an out-of-range finesse to raise error."""

    with pytest.raises(CavityCoolConfigError) as ex:
        _ = make_config({"cavity": {"finesse": 0.5}})

    assert (
        str(ex.value)
        == "Invalid config value for cavity.finesse. Input should be greater than 1."
    )


def test_drive_pump_is_exclusive() -> None:
    with pytest.raises(CavityCoolConfigError) as ex:
        make_config({"drive": {"omega_p_hz": 1e9, "saturation": 0.01}})
    assert "Invalid config value for drive." in str(ex.value)
    assert "set only one of omega_p_hz and saturation" in str(ex.value)


def test_unknown_schema_version() -> None:
    with pytest.raises(CavityCoolConfigError):
        make_config({"schema_version": 2})


def test_config_write_to_file(config_obj: CavityCoolConfig, tmp_init_dir: str) -> None:
    """Test config is written to yaml file."""
    filepath = pathlib.Path(tmp_init_dir).joinpath("config.yml")
    write_to_file(config_obj, filepath)
    with open(filepath, "r") as f:
        yaml_data = yaml.safe_load(f)

    assert yaml_data == config_obj.to_yaml_dict()
    assert "omega_p_hz" not in yaml_data["drive"]


def test_config_load_from_file(config_obj: CavityCoolConfig, tmp_init_dir: str) -> None:
    """Test config is read from yaml file into config object."""
    filepath = pathlib.Path(tmp_init_dir).joinpath("config.yml")
    with filepath.open("w") as config_file:
        yaml.dump(config_obj.to_yaml_dict(), config_file)

    config = load_from_file(filepath)
    assert config == config_obj


def test_load_fixture_files() -> None:
    config = load_from_file(VALID_CONFIG)
    assert config is not None
    assert config.cavity.radius_m == 0.1
    assert config.drive.saturation == 0.01

    with pytest.raises(CavityCoolConfigError) as ex:
        load_from_file(UNKNOWN_KEY_CONFIG)
    assert "cavity.mirror_coating" in str(ex.value)

    with pytest.raises(CavityCoolConfigError):
        load_from_file(BAD_VALUE_CONFIG)


def test_load_missing_and_empty_files(tmp_init_dir: str) -> None:
    assert load_from_file(pathlib.Path(tmp_init_dir) / "absent.yml") is None
    empty = pathlib.Path(tmp_init_dir) / "empty.yml"
    empty.write_text("")
    assert load_from_file(empty) == make_config()


def test_load_malformed_files(tmp_init_dir: str) -> None:
    scalar = pathlib.Path(tmp_init_dir) / "scalar.yml"
    scalar.write_text("just a string\n")
    with pytest.raises(CavityCoolConfigError, match="must be a mapping"):
        load_from_file(scalar)

    broken = pathlib.Path(tmp_init_dir) / "broken.yml"
    broken.write_text("cavity: [unclosed\n")
    with pytest.raises(CavityCoolConfigError, match="Malformed YAML"):
        load_from_file(broken)


def test_update_config(config_obj: CavityCoolConfig) -> None:
    updated = update_config(config_obj, {"cavity": {"finesse": 2e4}})
    assert updated.cavity.finesse == 2e4
    assert updated.cavity.radius_m == 0.05
    assert config_obj.cavity.finesse == 1e4

    with pytest.raises(CavityCoolConfigError):
        update_config(config_obj, {"cavity": {"degradation": 2.0}})


def test_config_init_cmd(tmp_init_dir: str) -> None:
    """Test config init writes the defaults and refuses to overwrite."""
    path = pathlib.Path(tmp_init_dir) / "cavitycool.yml"
    runner = CliRunner()

    result = runner.invoke(config_cmd, ["init", "--path", str(path)])
    assert result.exit_code == 0
    assert load_from_file(path) == make_config()

    result = runner.invoke(config_cmd, ["init", "--path", str(path)])
    assert result.exit_code == 1

    result = runner.invoke(config_cmd, ["init", "--path", str(path), "--force"])
    assert result.exit_code == 0
