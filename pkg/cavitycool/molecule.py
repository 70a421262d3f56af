# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""
Raman loss for molecules: the embedded OH transition table, three-level decay
rates and the photon budget before a molecule is shelved in a dark state.
"""

import hashlib
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError
from ruamel.yaml import YAML

from cavitycool.errors import CavityCoolError, DomainError
from cavitycool.units import AMU, Transition


logger = logging.getLogger(__name__)

DATA_PACKAGE = "cavitycool.data"
TABLE_FILE = "oh_transitions.yaml"


class OHTransitionRecord(BaseModel):
    """One row of the OH transition table, stored in laboratory units."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    line: str
    lambda_ae: float = Field(gt=0, description="Wavelength (nm)")
    j_prime: str
    n_prime: int
    gamma_over_2pi: float = Field(gt=0, description="Decay rate (Hz)")
    upsilon: float = Field(ge=0)
    repumpers: int = Field(ge=0)
    vib_leak: float = Field(ge=0, le=1)
    cycling_hyperfine: bool
    microwave_pulses: int = Field(ge=0)
    repump_lines: Tuple[str, ...] = ()
    notes: str = ""


class OHTable(BaseModel):
    """The embedded dataset."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    species: str
    mass_amu: float = Field(gt=0)
    electronic: Tuple[OHTransitionRecord, ...]
    vibrational: Tuple[OHTransitionRecord, ...]

    @property
    def records(self) -> Tuple[OHTransitionRecord, ...]:
        return self.electronic + self.vibrational


class TransitionNotFoundError(CavityCoolError, KeyError):
    """No record with the requested line label."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


@lru_cache(maxsize=1)
def load_table() -> OHTable:
    """Load and validate the embedded OH table (cached, read-only)."""
    yaml = YAML(typ="safe")
    text = resources.files(DATA_PACKAGE).joinpath(TABLE_FILE).read_text(encoding="utf-8")
    try:
        table = OHTable.model_validate(yaml.load(text))
    except ValidationError as ex:
        raise CavityCoolError(f"Embedded OH table is invalid: {ex}") from ex
    logger.debug(f"Loaded {len(table.records)} OH transition records")
    return table


def table_records() -> List[OHTransitionRecord]:
    """The electronic cooling lines in table order."""
    return list(load_table().electronic)


def table_as_dicts() -> List[Dict[str, Any]]:
    """Every record, electronic then vibrational, as plain dicts."""
    return [record.model_dump(mode="json") for record in load_table().records]


def table_checksum() -> str:
    """sha256 of the embedded table file as shipped."""
    data = resources.files(DATA_PACKAGE).joinpath(TABLE_FILE).read_bytes()
    return hashlib.sha256(data).hexdigest()


def transition_from_record(record: OHTransitionRecord) -> Transition:
    """Convert a table row to a `Transition` in SI units and rad/s."""
    return Transition(
        name=record.line,
        lambda_ae=record.lambda_ae * 1e-9,
        gamma=2 * math.pi * record.gamma_over_2pi,
        upsilon=record.upsilon,
        mass=load_table().mass_amu * AMU,
        repumper_count=record.repumpers,
        notes=record.notes,
    )


def get_record(name: str) -> OHTransitionRecord:
    for record in load_table().records:
        if record.line == name:
            return record
    known = ", ".join(record.line for record in load_table().records)
    raise TransitionNotFoundError(f"Unknown transition '{name}'. Known lines: {known}.")


def get_transition(name: str) -> Transition:
    """Transition by line label: P1(1), Q1(1), Q21(1), v1-0 or v2-0."""
    return transition_from_record(get_record(name))


def vibrational_candidates() -> List[Transition]:
    """The 2.8 um fundamental and the 1.4 um overtone."""
    return [transition_from_record(record) for record in load_table().vibrational]


def three_level_decay_rates(gamma: float, upsilon: float) -> Tuple[float, float]:
    """
    Split gamma into Rayleigh and Raman parts with gamma_Ry / gamma_Rn = upsilon.

    >>> three_level_decay_rates(2.0, 1.0)
    (1.0, 1.0)
    """
    if gamma <= 0:
        raise DomainError(f"Decay rate must be positive, got {gamma}.")
    if upsilon < 0:
        raise DomainError(f"Rayleigh-to-Raman ratio must be non-negative, got {upsilon}.")
    gamma_rn = gamma / (1 + upsilon)
    return gamma - gamma_rn, gamma_rn


@dataclass(frozen=True)
class PhotonBudget:
    """
    Branching of a single excitation between cavity decay, Rayleigh and Raman
    scattering. Relative to the Raman channel the weights are (1+Y)C for the
    cavity, Y for Rayleigh and 1 for Raman, with Y the Rayleigh-to-Raman ratio.
    """

    upsilon: float
    cooperativity: float
    p_shelve_per_scatter: float
    mean_free_scatters_to_shelve: float
    cavity_to_raman_ratio: float
    p_shelve_per_cavity_photon: float

    @property
    def cavity_photons_before_shelving(self) -> float:
        """Mean number of cavity photons emitted before a Raman event."""
        return self.cavity_to_raman_ratio

    @property
    def p_shelve_per_emission(self) -> float:
        """Raman share of all emissions, 1 / ((1+Y)C + 1 + Y)."""
        return 1 / (self.cavity_to_raman_ratio + 1 + self.upsilon)

    def survival_after_n_cavity_photons(self, n: int) -> float:
        """
        Probability of staying bright after n emission events.

        n counts emissions in every channel; each is an independent draw.
        """
        if n < 0:
            raise DomainError(f"Photon count must be non-negative, got {n}.")
        return float((1 - self.p_shelve_per_emission) ** n)

    def to_dict(self) -> Dict[str, float]:
        return {
            "upsilon": self.upsilon,
            "cooperativity": self.cooperativity,
            "p_shelve_per_scatter": self.p_shelve_per_scatter,
            "mean_free_scatters_to_shelve": self.mean_free_scatters_to_shelve,
            "cavity_to_raman_ratio": self.cavity_to_raman_ratio,
            "p_shelve_per_cavity_photon": self.p_shelve_per_cavity_photon,
            "cavity_photons_before_shelving": self.cavity_photons_before_shelving,
        }


def photon_budget(upsilon: float, cooperativity: float) -> PhotonBudget:
    """
    Photon budget for a molecule with Rayleigh-to-Raman ratio `upsilon`.

    >>> photon_budget(1.0, 0.0).p_shelve_per_scatter
    0.5
    """
    if upsilon < 0:
        raise DomainError(f"Rayleigh-to-Raman ratio must be non-negative, got {upsilon}.")
    if cooperativity < 0:
        raise DomainError(f"Cooperativity must be non-negative, got {cooperativity}.")
    ratio = (1 + upsilon) * cooperativity
    return PhotonBudget(
        upsilon=upsilon,
        cooperativity=cooperativity,
        p_shelve_per_scatter=1 / (1 + upsilon),
        mean_free_scatters_to_shelve=1 + upsilon,
        cavity_to_raman_ratio=ratio,
        p_shelve_per_cavity_photon=1 / (1 + ratio),
    )
