# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Stark-decelerator zone presets and cavity transit-time kinematics."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence

from pydantic import BaseModel, ConfigDict, Field

from cavitycool import const
from cavitycool.errors import DomainError
from cavitycool.multimode import ConfocalReport


logger = logging.getLogger(__name__)

ZONE_WARNING = (
    "Illustrative values read off an approximate Stark-decelerator efficiency "
    "curve; not measured data."
)


class Zone(str, Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    IV = "IV"


class Scenario(BaseModel):
    """A decelerated OH packet: density and velocity at the cavity."""

    model_config = ConfigDict(frozen=True)

    zone: Zone
    density: float = Field(gt=0, description="Packet density (1/cm^3)")
    velocity: float = Field(ge=0, description="Packet velocity (m/s)")
    description: str


ZONE_PRESETS: List[Scenario] = [
    Scenario(
        zone=Zone.I,
        density=1e9,
        velocity=400.0,
        description="Post-skimmer packet; short transit, large molecule number.",
    ),
    Scenario(
        zone=Zone.II,
        density=1e7,
        velocity=100.0,
        description="Partly slowed; guide along the cavity axis to extend interaction.",
    ),
    Scenario(
        zone=Zone.III,
        density=1e6,
        velocity=30.0,
        description="Slow enough to be reflected by an electrostatic or magnetic mirror.",
    ),
    Scenario(
        zone=Zone.IV,
        density=1e6,
        velocity=5.0,
        description="Trapped at the decelerator terminus; blackbody-limited lifetime.",
    ),
]


def zone_preset(zone: str) -> Scenario:
    for scenario in ZONE_PRESETS:
        if scenario.zone.value == zone:
            return scenario
    raise DomainError(f"Unknown zone '{zone}'; expected one of I, II, III, IV.")


@dataclass(frozen=True)
class TransitTimes:
    """Crossing times in s. Waist crossings use the diameter, 2 w."""

    velocity: float
    t_waist_confocal: float
    t_waist_tem00: float
    t_axial: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "v_m_s": self.velocity,
            "t_waist_confocal_s": self.t_waist_confocal,
            "t_waist_tem00_s": self.t_waist_tem00,
            "t_axial_s": self.t_axial,
        }


def transit_times(velocity: float, cavity: ConfocalReport) -> TransitTimes:
    """Times to cross all confocal modes, the TEM00 mode, and 66% of the length."""
    if velocity <= 0:
        raise DomainError(f"Velocity must be positive, got {velocity}.")
    return TransitTimes(
        velocity=velocity,
        t_waist_confocal=2 * cavity.w_sa / velocity,
        t_waist_tem00=2 * cavity.w0 / velocity,
        t_axial=const.AXIAL_CROSSING_FRACTION * cavity.length / velocity,
    )


def transit_table(velocities: Sequence[float], cavity: ConfocalReport) -> List[Dict[str, float]]:
    return [transit_times(velocity, cavity).to_dict() for velocity in velocities]
