# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Common test fixtures."""

import pathlib
import shutil
import tempfile
from typing import Generator, TypeVar

import pytest

from cavitycool.molecule import get_transition
from cavitycool.multimode import ConfocalReport, confocal_report
from cavitycool.steadystate import DriveConfig
from cavitycool.units import Transition, rad_s


T = TypeVar("T")
YieldFixture = Generator[T, None, None]

_TEST_PREFIX = "cavitycool_tests"


@pytest.fixture(scope="function")
def tmp_init_dir() -> YieldFixture[str]:
    tmpdir = tempfile.mkdtemp(prefix=_TEST_PREFIX)
    yield tmpdir
    shutil.rmtree(tmpdir)


@pytest.fixture(scope="function")
def tmp_path_dir(tmp_init_dir: str) -> pathlib.Path:
    return pathlib.Path(tmp_init_dir)


@pytest.fixture(scope="session")
def oh_p1() -> Transition:
    """The default OH cooling line."""
    return get_transition("P1(1)")


@pytest.fixture(scope="session")
def confocal_2cm(oh_p1: Transition) -> ConfocalReport:
    """2 cm confocal cavity with finesse 5000."""
    return confocal_report(oh_p1, 5000.0, 0.02)


@pytest.fixture(scope="function")
def weak_drive() -> DriveConfig:
    """A dispersive, weakly saturated operating point."""
    kappa = rad_s(7.5e5)
    gamma_perp = rad_s(1.16e5)
    delta_pa = -rad_s(5e7)
    return DriveConfig(
        omega_p=rad_s(4e6),
        omega_d=0.0,
        delta_pa=delta_pa,
        delta_pc=-kappa,
        g=rad_s(4e5),
        gamma_perp=gamma_perp,
        kappa=kappa,
    )
