# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Unit tests for CLI utils module"""

import math

import pytest

from cavitycool.cli.config import make_config
from cavitycool.cli.utils import (
    parse_grid,
    parse_scan,
    resolve_drive,
    resolve_ensemble,
    resolve_geometry,
    scan_grid,
    with_hz_keys,
)
from cavitycool.errors import DomainError
from cavitycool.steadystate import saturation
from cavitycool.units import ModeKind, hz


def test_parse_grid() -> None:
    assert parse_grid("1:3:3") == [1.0, 2.0, 3.0]
    assert parse_grid(" 0.02 ") == [0.02]
    assert parse_grid("5:5:1") == [5.0]


@pytest.mark.parametrize("text", ["", "1:2", "a:b:3", "1:2:0", "1:2:3:4"])
def test_parse_grid_errors(text: str) -> None:
    with pytest.raises(DomainError):
        parse_grid(text)


def test_parse_scan() -> None:
    assert parse_scan("omega_p=1e9:2e9:2") == ("omega_p", [1e9, 2e9])
    with pytest.raises(DomainError, match="Unsupported scan"):
        parse_scan("kappa=1:2:2")
    with pytest.raises(DomainError):
        parse_scan("omega_p")


def test_resolve_geometry_defaults_to_confocal() -> None:
    geometry = resolve_geometry(make_config({"cavity": {"radius_m": 0.05}}))
    assert geometry.length == geometry.radius == 0.05
    assert geometry.mode_kind == ModeKind.CONFOCAL_MULTIMODE


def test_resolve_drive_defaults() -> None:
    drive = resolve_drive(make_config())
    assert hz(drive.delta_pa) == pytest.approx(-1e10)
    assert drive.delta_pc == pytest.approx(-drive.kappa)
    assert saturation(drive) == pytest.approx(0.01, rel=1e-9)


def test_resolve_drive_explicit_pump() -> None:
    drive = resolve_drive(
        make_config({"drive": {"omega_p_hz": 1e8, "delta_pc_hz": -1e5, "g_hz": 2e5}})
    )
    assert drive.omega_p == pytest.approx(2 * math.pi * 1e8)
    assert drive.delta_pc == pytest.approx(-2 * math.pi * 1e5)
    assert drive.g == pytest.approx(2 * math.pi * 2e5)


def test_resolve_ensemble_defaults() -> None:
    ensemble = resolve_ensemble(make_config())
    assert ensemble.kappa == pytest.approx(2 * math.pi * 1e6)
    assert ensemble.dt == pytest.approx(0.01 / ensemble.kappa)
    assert ensemble.duration == pytest.approx(200 / ensemble.kappa)
    u0 = ensemble.g**2 * ensemble.delta_pa / (ensemble.delta_pa**2 + ensemble.gamma_perp**2)
    assert ensemble.delta_pc == pytest.approx(100 * u0 - ensemble.kappa)


def test_scan_grid() -> None:
    config = make_config({"ensemble": {"omega_p_hz": 1e9}, "scan": {"omega_p_num": 3}})
    assert scan_grid(config) == pytest.approx([1e8, 5.5e8, 1e9])


def test_with_hz_keys() -> None:
    converted = with_hz_keys({"kappa": 2 * math.pi * 5.0, "n": 3}, ["kappa"])
    assert converted == {"kappa_hz": pytest.approx(5.0), "n": 3}
