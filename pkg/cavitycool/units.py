# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""
Physical constants, unit conventions and cavity/particle parameter conversions.

Every rate and detuning is carried internally as an angular frequency in rad/s.
Values reported in "Hz" are the angular value divided by 2*pi; `hz` and `rad_s`
convert between the two.
"""

import logging
import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import constants

from cavitycool.errors import DomainError


logger = logging.getLogger(__name__)

HBAR = constants.hbar
K_B = constants.k
C_LIGHT = constants.c
AMU = constants.atomic_mass

CONFOCAL_TOLERANCE = 1e-9


def hz(value: float) -> float:
    """Angular frequency (rad/s) to cyclic frequency (Hz)."""
    return value / (2 * math.pi)


def rad_s(value: float) -> float:
    """Cyclic frequency (Hz) to angular frequency (rad/s)."""
    return value * 2 * math.pi


def wavenumber(wavelength: float) -> float:
    """k = 2*pi/lambda in 1/m."""
    if wavelength <= 0:
        raise DomainError(f"Wavelength must be positive, got {wavelength}.")
    return 2 * math.pi / wavelength


def recoil_frequency(wavelength: float, mass: float) -> float:
    """omega_rec = hbar k^2 / (2 m) in rad/s."""
    if mass <= 0:
        raise DomainError(f"Mass must be positive, got {mass}.")
    return HBAR * wavenumber(wavelength) ** 2 / (2 * mass)


class Transition(BaseModel):
    """An optical transition of the cooled particle."""

    model_config = ConfigDict(frozen=True)

    name: str
    lambda_ae: float = Field(gt=0, description="Wavelength (m)")
    gamma: float = Field(gt=0, description="Excited-state energy decay rate (rad/s)")
    upsilon: float = Field(ge=0, description="Rayleigh-to-Raman ratio")
    mass: float = Field(gt=0, description="Particle mass (kg)")
    repumper_count: int = 0
    notes: str = ""

    @property
    def gamma_perp(self) -> float:
        """Dipole decay rate, gamma/2."""
        return self.gamma / 2

    @property
    def k(self) -> float:
        return wavenumber(self.lambda_ae)

    @property
    def omega_rec(self) -> float:
        return recoil_frequency(self.lambda_ae, self.mass)


class ModeKind(str, Enum):
    """Cavity mode structure."""

    SINGLE_MODE_TEM00 = "SingleModeTEM00"
    CONFOCAL_MULTIMODE = "ConfocalMultimode"


class CavityGeometry(BaseModel):
    """Mirror geometry and finesse of a two-mirror resonator."""

    model_config = ConfigDict(frozen=True)

    length: float = Field(gt=0, description="Mirror separation L (m)")
    radius: float = Field(gt=0, description="Mirror radius of curvature R (m)")
    finesse: float = Field(gt=1)
    mode_kind: ModeKind = ModeKind.SINGLE_MODE_TEM00
    degradation: float = Field(default=1.0, gt=0, le=1)

    @model_validator(mode="after")
    def check_confocal(self) -> "CavityGeometry":
        """A confocal multimode cavity needs R = L."""
        if self.mode_kind == ModeKind.CONFOCAL_MULTIMODE:
            if abs(self.radius - self.length) > CONFOCAL_TOLERANCE * self.length:
                raise ValueError(
                    f"Confocal cavity requires radius == length, got R={self.radius} "
                    f"and L={self.length}"
                )
        return self

    @classmethod
    def confocal(
        cls, radius: float, finesse: float, degradation: float = 1.0
    ) -> "CavityGeometry":
        """Confocal L = R cavity."""
        return cls(
            length=radius,
            radius=radius,
            finesse=finesse,
            mode_kind=ModeKind.CONFOCAL_MULTIMODE,
            degradation=degradation,
        )


def kappa_from_finesse(length: float, finesse: float) -> float:
    """Field decay rate kappa = pi c / (2 L F) in rad/s."""
    if length <= 0:
        raise DomainError(f"Cavity length must be positive, got {length}.")
    if finesse <= 1:
        raise DomainError(f"Finesse must exceed 1, got {finesse}.")
    return math.pi * C_LIGHT / (2 * length * finesse)


def kappa_from_q(wavelength: float, q: float) -> float:
    """kappa = pi c / (lambda Q)."""
    if q <= 0:
        raise DomainError(f"Quality factor must be positive, got {q}.")
    return math.pi * C_LIGHT / (wavelength * q)


def q_from_kappa(wavelength: float, kappa: float) -> float:
    if kappa <= 0:
        raise DomainError(f"kappa must be positive, got {kappa}.")
    return math.pi * C_LIGHT / (wavelength * kappa)


def finesse_from_q(wavelength: float, q: float, length: float) -> float:
    """F = lambda Q / (2 L)."""
    if length <= 0:
        raise DomainError(f"Cavity length must be positive, got {length}.")
    return wavelength * q / (2 * length)


def tem00_waist(wavelength: float, length: float, radius: float) -> float:
    """
    TEM00 waist of a symmetric two-mirror resonator.

    w0^2 = (lambda / 2 pi) sqrt(L (2R - L)), which is R/k at L = R.
    """
    if not 0 < length < 2 * radius:
        raise DomainError(
            f"Resonator with L={length} and R={radius} has no stable Gaussian mode."
        )
    return math.sqrt(wavelength / (2 * math.pi) * math.sqrt(length * (2 * radius - length)))


def mode_volume(waist: float, length: float) -> float:
    """V_m = pi w0^2 L / 4."""
    return math.pi * waist**2 * length / 4


def coupling_from_volume(transition: Transition, volume: float) -> float:
    """g = sqrt(3 c lambda^2 gamma_perp / (4 pi V_m)) at an antinode."""
    return math.sqrt(
        3 * C_LIGHT * transition.lambda_ae**2 * transition.gamma_perp / (4 * math.pi * volume)
    )


def coupling_g0(transition: Transition, cavity: CavityGeometry) -> float:
    """Maximum single-particle coupling g0 in rad/s."""
    w0 = tem00_waist(transition.lambda_ae, cavity.length, cavity.radius)
    return coupling_from_volume(transition, mode_volume(w0, cavity.length))


def single_cooperativity(g: float, kappa: float, gamma_perp: float) -> float:
    """C = g^2 / (2 kappa gamma_perp), the cavity-to-free-space scattering ratio."""
    return g**2 / (2 * kappa * gamma_perp)


def scattering_cooperativity(finesse: float, k: float, waist: float) -> float:
    """6F / (pi k^2 w0^2), the solid-angle form. Equals C_single / 2 for V_m = pi w0^2 L / 4."""
    return 6 * finesse / (math.pi * k**2 * waist**2)


def purcell_factor(transition: Transition, cavity: CavityGeometry) -> float:
    """Purcell factor g0^2 / (kappa gamma_perp) of the TEM00 mode."""
    if cavity.mode_kind != ModeKind.SINGLE_MODE_TEM00:
        logger.debug("Purcell factor evaluated for the TEM00 mode of a multimode cavity.")
    g0 = coupling_g0(transition, cavity)
    kappa = kappa_from_finesse(cavity.length, cavity.finesse)
    return g0**2 / (kappa * transition.gamma_perp)


def saturation_photon_number(g0: float, gamma_perp: float) -> float:
    """m0 = gamma_perp^2 / (2 g0^2)."""
    return gamma_perp**2 / (2 * g0**2)


def critical_atom_number(g0: float, kappa: float, gamma_perp: float) -> float:
    """N0 = 2 gamma_perp kappa / g0^2."""
    return 2 * gamma_perp * kappa / g0**2


def collective_cooperativity(n_particles: float, cooperativity: float) -> float:
    """N C; optical bistability sets in above 1."""
    return n_particles * cooperativity


def recoil_temperature(omega_rec: float) -> float:
    """T_rec = hbar omega_rec / k_B."""
    return HBAR * omega_rec / K_B


def recoil_energy_temperature(omega_rec: float) -> float:
    """Photon recoil energy (hbar k)^2 / m = 2 hbar omega_rec expressed in kelvin."""
    return 2 * HBAR * omega_rec / K_B


def linewidth_temperature(kappa: float) -> float:
    """hbar kappa / k_B."""
    return HBAR * kappa / K_B


def aberration_n_eff(finesse: float, radius: float, k: float) -> float:
    """(pi k R / 2F)^(1/4)."""
    return (math.pi * k * radius / (2 * finesse)) ** 0.25


def aberration_waist(finesse: float, radius: float, k: float) -> float:
    """w_sa = 2 (2 pi R^3 / (k F))^(1/4)."""
    return 2 * (2 * math.pi * radius**3 / (k * finesse)) ** 0.25


@dataclass(frozen=True)
class DerivedCavity:
    """Derived quantities of a transition coupled to a cavity."""

    kappa: float
    w0: float
    v_m: float
    g0: float
    n_eff: float
    w_sa: float
    c_single: float
    c_sa: float
    q: float
    m0: float
    n0_crit: float
    purcell: float
    c_scattering: float
    n_eff_ideal: float

    @property
    def g_eff(self) -> float:
        """Super-mode coupling n_eff * g0."""
        return self.n_eff * self.g0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def derive_cavity(transition: Transition, cavity: CavityGeometry) -> DerivedCavity:
    """Evaluate every derived cavity quantity for a transition."""
    k = transition.k
    kappa = kappa_from_finesse(cavity.length, cavity.finesse)
    w0 = tem00_waist(transition.lambda_ae, cavity.length, cavity.radius)
    v_m = mode_volume(w0, cavity.length)
    g0 = coupling_from_volume(transition, v_m)
    c_single = single_cooperativity(g0, kappa, transition.gamma_perp)
    purcell = 2 * c_single

    if cavity.mode_kind == ModeKind.CONFOCAL_MULTIMODE:
        if cavity.finesse >= k * cavity.radius:
            logger.warning(
                f"F={cavity.finesse:g} >= kR={k * cavity.radius:.3g}; confocal enhancement "
                "no longer applies."
            )
        n_eff_ideal = aberration_n_eff(cavity.finesse, cavity.radius, k)
        w_sa = aberration_waist(cavity.finesse, cavity.radius, k)
    else:
        n_eff_ideal = 1.0
        w_sa = w0
    # degradation is the realized fraction of the ideal C_sa / C gain
    if cavity.mode_kind == ModeKind.CONFOCAL_MULTIMODE:
        n_eff = math.sqrt(cavity.degradation) * n_eff_ideal
    else:
        n_eff = 1.0

    return DerivedCavity(
        kappa=kappa,
        w0=w0,
        v_m=v_m,
        g0=g0,
        n_eff=n_eff,
        w_sa=w_sa,
        c_single=c_single,
        c_sa=purcell * n_eff**2,
        q=q_from_kappa(transition.lambda_ae, kappa),
        m0=saturation_photon_number(g0, transition.gamma_perp),
        n0_crit=critical_atom_number(g0, kappa, transition.gamma_perp),
        purcell=purcell,
        c_scattering=scattering_cooperativity(cavity.finesse, k, w0),
        n_eff_ideal=n_eff_ideal,
    )
