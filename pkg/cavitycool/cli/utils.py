# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Reusable logic for all commands: grid parsing and config resolution."""

from typing import Any, Callable, Dict, Iterable, List, Tuple, TypeVar

import numpy as np
from pydantic import ValidationError

from cavitycool.cli.config import CavityCoolConfig, CavityCoolConfigError
from cavitycool.errors import DomainError
from cavitycool.molecule import get_transition
from cavitycool.selforg import EnsembleConfig
from cavitycool.steadystate import DriveConfig, pump_for_saturation
from cavitycool.units import (
    AMU,
    HBAR,
    K_B,
    CavityGeometry,
    DerivedCavity,
    Transition,
    derive_cavity,
    hz,
    rad_s,
    wavenumber,
)


T = TypeVar("T")

# Thermal start and integration window of a self-organization run, in 1/kappa
DEFAULT_TEMPERATURE_HBAR_KAPPA = 10.0
DEFAULT_DT_KAPPA = 0.01
DEFAULT_DURATION_KAPPA = 200.0
DEFAULT_SATURATION = 0.01


def parse_grid(text: str) -> List[float]:
    """
    Parse `a:b:n` into n evenly spaced values from a to b, or a single value.

    >>> parse_grid("1:3:3")
    [1.0, 2.0, 3.0]
    """
    parts = [part.strip() for part in text.split(":")]
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
            if num < 1:
                raise DomainError(f"Grid '{text}' needs at least one point.")
            return [float(value) for value in np.linspace(start, stop, num)]
    except ValueError as ex:
        if isinstance(ex, DomainError):
            raise
        raise DomainError(f"Cannot parse grid '{text}'; expected a:b:n.") from ex
    raise DomainError(f"Cannot parse grid '{text}'; expected a:b:n.")


def parse_scan(text: str) -> Tuple[str, List[float]]:
    """Parse `name=a:b:n`; only the pump strength `omega_p` can be scanned."""
    name, sep, grid = text.partition("=")
    if not sep or name.strip() != "omega_p":
        raise DomainError(f"Unsupported scan '{text}'; expected omega_p=a:b:n (Hz).")
    return name.strip(), parse_grid(grid)


def _validated(build: Callable[[], T]) -> T:
    try:
        return build()
    except ValidationError as ex:
        raise CavityCoolConfigError(ex.errors())


def resolve_transition(config: CavityCoolConfig) -> Transition:
    return get_transition(config.transition.name)


def resolve_geometry(config: CavityCoolConfig) -> CavityGeometry:
    section = config.cavity
    length = section.length_m if section.length_m is not None else section.radius_m
    return _validated(
        lambda: CavityGeometry(
            length=length,
            radius=section.radius_m,
            finesse=section.finesse,
            mode_kind=section.mode_kind,
            degradation=section.degradation,
        )
    )


def resolve_cavity(config: CavityCoolConfig) -> Tuple[Transition, DerivedCavity]:
    transition = resolve_transition(config)
    return transition, derive_cavity(transition, resolve_geometry(config))


def resolve_drive(config: CavityCoolConfig) -> DriveConfig:
    """Operating point in rad/s from the drive section and the derived cavity."""
    transition, derived = resolve_cavity(config)
    section = config.drive
    delta_pa = rad_s(section.delta_pa_hz)
    if section.omega_p_hz is not None:
        omega_p = rad_s(section.omega_p_hz)
    else:
        s = section.saturation if section.saturation is not None else DEFAULT_SATURATION
        omega_p = pump_for_saturation(s, delta_pa, transition.gamma_perp)
    return _validated(
        lambda: DriveConfig(
            omega_p=omega_p,
            omega_d=rad_s(section.omega_d_hz),
            delta_pa=delta_pa,
            delta_pc=(
                rad_s(section.delta_pc_hz) if section.delta_pc_hz is not None else -derived.kappa
            ),
            g=rad_s(section.g_hz) if section.g_hz is not None else derived.g_eff,
            gamma_perp=transition.gamma_perp,
            kappa=derived.kappa,
        )
    )


def resolve_ensemble(config: CavityCoolConfig) -> EnsembleConfig:
    """Stochastic-run parameters in SI and rad/s from the ensemble section."""
    section = config.ensemble
    kappa = rad_s(section.kappa_hz)
    delta_pa = rad_s(section.delta_pa_hz)
    if section.delta_pc_hz is not None:
        delta_pc = rad_s(section.delta_pc_hz)
    else:
        g = rad_s(section.g_hz)
        gamma_perp = rad_s(section.gamma_perp_hz)
        u0 = g**2 * delta_pa / (delta_pa**2 + gamma_perp**2)
        delta_pc = section.n_particles * u0 - kappa
    temperature = (
        section.temperature_k
        if section.temperature_k is not None
        else DEFAULT_TEMPERATURE_HBAR_KAPPA * HBAR * kappa / K_B
    )
    return _validated(
        lambda: EnsembleConfig(
            n_particles=section.n_particles,
            temperature=temperature,
            kappa=kappa,
            delta_pc=delta_pc,
            delta_pa=delta_pa,
            g=rad_s(section.g_hz),
            gamma_perp=rad_s(section.gamma_perp_hz),
            omega_p=rad_s(section.omega_p_hz),
            k=wavenumber(section.wavelength_m),
            mass=section.mass_amu * AMU,
            dt=section.dt_s if section.dt_s is not None else DEFAULT_DT_KAPPA / kappa,
            duration=(
                section.duration_s
                if section.duration_s is not None
                else DEFAULT_DURATION_KAPPA / kappa
            ),
            seed=section.seed,
            noise_model=section.noise_model,
            dispersive_sum=section.dispersive_sum,
            pump_axis_init=section.pump_axis_init,
            omega_d=rad_s(section.omega_d_hz),
            seed_phase=section.seed_phase,
            field_noise=section.field_noise,
            momentum_noise=section.momentum_noise,
            upsilon=section.upsilon,
            sample_every=section.sample_every,
        )
    )


def scan_grid(config: CavityCoolConfig) -> List[float]:
    """Pump grid in Hz; unset ends default to 0.1 and 1 times the configured pump."""
    section = config.scan
    pump = config.ensemble.omega_p_hz
    start = section.omega_p_start_hz if section.omega_p_start_hz is not None else 0.1 * pump
    stop = section.omega_p_stop_hz if section.omega_p_stop_hz is not None else pump
    return [float(value) for value in np.linspace(start, stop, section.omega_p_num)]


def with_hz_keys(values: Dict[str, Any], rate_keys: Iterable[str]) -> Dict[str, Any]:
    """Convert the named angular frequencies to Hz and suffix their keys with `_hz`."""
    keys = set(rate_keys)
    return {
        (f"{key}_hz" if key in keys else key): (hz(value) if key in keys else value)
        for key, value in values.items()
    }
