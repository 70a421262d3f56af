# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""
cavitycool CLI configuration module.

Frequencies in the file are plain Hz (`_hz` keys); they are converted to
rad/s when the physics objects are built.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from cavitycool import const
from cavitycool.selforg import DispersiveSum, NoiseModel, PumpAxisInit
from cavitycool.units import ModeKind


logger = logging.getLogger(__name__)


class CavityCoolConfigError(Exception):
    """Custom error to better format pydantic exceptions.

    Example pydantic error dict: {'type': str, 'loc': tuple[str], 'msg': str, 'input': str}

    """

    def __init__(self, errors: List[Dict[str, Any]]):
        self.errors = list(map(self._format, errors))
        super().__init__(f"cavitycool config contains {len(self.errors)} error(s).")

    def _format(self, err: Dict[str, Any]) -> str:
        """Returns a formatted string with the error details."""
        msg = "Unable to load config."  # default message if we can't parse error

        if err.get("loc"):
            key = ".".join(str(part) for part in err["loc"])
            msg = f"Invalid config value for {key}."
        if err.get("msg"):
            msg += f" {err['msg']}."
        return msg

    def __str__(self) -> str:
        return " ".join(self.errors)


class Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class TransitionSection(Section):
    name: str = const.DEFAULT_TRANSITION


class CavitySection(Section):
    """Resonator geometry. `length_m` defaults to `radius_m` (confocal)."""

    radius_m: float = Field(default=0.02, gt=0)
    length_m: Optional[float] = Field(default=None, gt=0)
    finesse: float = Field(default=5000.0, gt=1)
    mode_kind: ModeKind = ModeKind.CONFOCAL_MULTIMODE
    degradation: float = Field(default=1.0, gt=0, le=1)


class DriveSection(Section):
    """
    One operating point. The pump is given either as `omega_p_hz` or as a
    free-space `saturation`; `delta_pc_hz` defaults to -kappa and `g_hz` to
    the cavity's effective coupling.
    """

    omega_p_hz: Optional[float] = Field(default=None, ge=0)
    saturation: Optional[float] = Field(default=None, ge=0)
    omega_d_hz: float = Field(default=0.0, ge=0)
    delta_pa_hz: float = -1e10
    delta_pc_hz: Optional[float] = None
    g_hz: Optional[float] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def check_pump(self) -> "DriveSection":
        if self.omega_p_hz is not None and self.saturation is not None:
            raise ValueError("set only one of omega_p_hz and saturation")
        if self.delta_pa_hz == 0:
            raise ValueError("delta_pa_hz must be nonzero")
        return self


class ThresholdSection(Section):
    temperature_k: float = Field(default=0.01, gt=0)
    n_particles: float = Field(default=1e4, ge=1)
    s_max: float = Field(default=0.05, gt=0, lt=1)


class CoolmapSection(Section):
    """Damping-ratio grid: log-spaced cooperativity rows by detuning columns."""

    c_min: float = Field(default=1e-2, gt=0)
    c_max: float = Field(default=1e2, gt=0)
    c_num: int = Field(default=200, ge=1)
    delta_pa_start_hz: float = -1e6
    delta_pa_stop_hz: float = -1e9
    delta_pa_num: int = Field(default=200, ge=1)


class EnsembleSection(Section):
    """
    Stochastic self-organization run. Unset `delta_pc_hz` gives N U0 - kappa,
    unset `temperature_k` gives 10 hbar kappa / k_B, unset `dt_s` and
    `duration_s` give 0.01 / kappa and 200 / kappa.
    """

    n_particles: int = Field(default=100, ge=1)
    temperature_k: Optional[float] = Field(default=None, ge=0)
    kappa_hz: float = Field(default=1e6, gt=0)
    delta_pa_hz: float = -1e10
    delta_pc_hz: Optional[float] = None
    gamma_perp_hz: float = Field(default=1.16e5, gt=0)
    g_hz: float = Field(default=3.1623e6, ge=0)
    omega_p_hz: float = Field(default=7.9057e9, ge=0)
    wavelength_m: float = Field(default=800e-9, gt=0)
    mass_amu: float = Field(default=100.0, gt=0)
    dt_s: Optional[float] = Field(default=None, gt=0)
    duration_s: Optional[float] = Field(default=None, gt=0)
    seed: int = 0
    noise_model: NoiseModel = NoiseModel.RECOIL_DIFFUSION
    dispersive_sum: DispersiveSum = DispersiveSum.COS
    pump_axis_init: PumpAxisInit = PumpAxisInit.UNIFORM
    omega_d_hz: float = Field(default=0.0, ge=0)
    seed_phase: float = 0.0
    field_noise: float = Field(default=1.0, ge=0)
    momentum_noise: float = Field(default=1.0, ge=0)
    upsilon: Optional[float] = Field(default=None, ge=0)
    sample_every: int = Field(default=10, ge=1)


class ScanSection(Section):
    """Linear pump grid in Hz and the seeds run at each point."""

    omega_p_start_hz: Optional[float] = Field(default=None, ge=0)
    omega_p_stop_hz: Optional[float] = Field(default=None, ge=0)
    omega_p_num: int = Field(default=5, ge=1)
    seeds: int = Field(default=10, ge=1)
    workers: Optional[int] = Field(default=None, ge=1)


class OracleSection(Section):
    fock_cutoff: int = Field(default=8, ge=2)
    saturations: List[float] = Field(default_factory=lambda: [1e-3, 1e-2], min_length=1)
    t_max_s: Optional[float] = Field(default=None, gt=0)
    n_steps: int = Field(default=2000, ge=2)


class CavityCoolConfig(BaseModel):
    """Data model for cavitycool configuration."""

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = 1
    transition: TransitionSection = Field(default_factory=TransitionSection)
    cavity: CavitySection = Field(default_factory=CavitySection)
    drive: DriveSection = Field(default_factory=DriveSection)
    threshold: ThresholdSection = Field(default_factory=ThresholdSection)
    coolmap: CoolmapSection = Field(default_factory=CoolmapSection)
    ensemble: EnsembleSection = Field(default_factory=EnsembleSection)
    scan: ScanSection = Field(default_factory=ScanSection)
    oracle: OracleSection = Field(default_factory=OracleSection)

    def to_yaml_dict(self) -> Dict[str, Any]:
        """Returns a dict that can be cleanly written to a yaml file.

        Unset values are omitted so the file only carries what was chosen
        or has a default worth showing. Values listed in IGNORED_VALUES
        will be skipped.
        """

        IGNORED_VALUES: List[Any] = [None, "None", []]

        config_dict: Dict[str, Any] = {"schema_version": self.schema_version}
        for name in type(self).model_fields:
            if name == "schema_version":
                continue
            section = getattr(self, name).model_dump(mode="json")
            # Filter out empty values to prevent them from appearing in the config
            config_dict[name] = dict(
                filter(lambda item: item[1] not in IGNORED_VALUES, section.items())
            )
        return config_dict


def load_from_file(file_path: Path) -> Optional[CavityCoolConfig]:
    """Load yaml file to cavitycool config object"""
    try:
        with open(file_path, "r", encoding="utf-8") as config_file:
            config_yaml = yaml.safe_load(config_file)
            if config_yaml is None:
                return CavityCoolConfig()
            if not isinstance(config_yaml, dict):
                raise CavityCoolConfigError(
                    [{"msg": f"Top level of {file_path} must be a mapping"}]
                )
            return CavityCoolConfig.model_validate(config_yaml)
    except ValidationError as ex:
        raise CavityCoolConfigError(ex.errors())
    except yaml.YAMLError as ex:
        raise CavityCoolConfigError([{"msg": f"Malformed YAML in {file_path}: {ex}"}])
    except (FileNotFoundError, IsADirectoryError):
        logger.debug(f"No config file found at {file_path}")
        return None


def write_to_file(config: CavityCoolConfig, file_path: Path) -> None:
    """Write config object to yaml file"""
    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
        with file_path.open("w", encoding="utf-8") as config_file:
            yaml.safe_dump(config.to_yaml_dict(), config_file, sort_keys=False)
    except ValidationError as ex:
        raise CavityCoolConfigError(ex.errors())


def make_config(values: Optional[Dict[str, Any]] = None) -> CavityCoolConfig:
    """Generates a new cavitycool config object"""
    try:
        if values:
            return CavityCoolConfig.model_validate(values)
        else:
            return CavityCoolConfig()
    except ValidationError as ex:
        raise CavityCoolConfigError(ex.errors())


def update_config(config: CavityCoolConfig, update: Dict[str, Any]) -> CavityCoolConfig:
    """
    Returns a new, revalidated config with section-level updates, e.g.
    {"cavity": {"finesse": 1e4}}.
    """
    merged = config.model_dump()
    for section, values in update.items():
        if isinstance(values, dict) and isinstance(merged.get(section), dict):
            merged[section] = {**merged[section], **values}
        else:
            merged[section] = values
    return make_config(merged)
