# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Cavity and free-space scattering rates, cooling figures and damping diagnostics."""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage

from cavitycool.errors import DomainError, SingularityError
from cavitycool.steadystate import DriveConfig
from cavitycool.units import HBAR, K_B, Transition, single_cooperativity


logger = logging.getLogger(__name__)

DISPERSIVE_MARGIN = 10.0
RECOIL_VELOCITY_MARGIN = 10.0

RATE_METADATA = {
    "proportionality": "unit prefactor",
    "t_f": "hbar kappa (1 + 1/C) / k_B",
    "cooling_rate": "hbar k v Gamma_c(-k|v|) / (m v^2 / 2)",
}


@dataclass(frozen=True)
class RateReport:
    """Scattering rates and temperature scales at one operating point."""

    gamma_c: float
    gamma_a: float
    ratio_C: Optional[float]
    t_f: float
    t_rec: float
    optimal_delta_pc: float
    capture_range: float
    metadata: Dict[str, str] = field(default_factory=lambda: dict(RATE_METADATA))


@dataclass(frozen=True)
class DressedState:
    """Bare-state weights of the addressed dressed state and its N-particle shift."""

    ce2: float
    ca2: float
    energy_shift: float


def _check_dispersive(cfg: DriveConfig) -> None:
    largest = max(cfg.omega_p, cfg.gamma_perp, cfg.g)
    if abs(cfg.delta_pa) < DISPERSIVE_MARGIN * largest:
        logger.warning(
            f"Dispersive condition weak: |Delta_pa|={abs(cfg.delta_pa):.3g} rad/s is less "
            f"than {DISPERSIVE_MARGIN:g}x max(Omega_p, gamma_perp, g)={largest:.3g} rad/s."
        )


def _pump_factor(cfg: DriveConfig) -> float:
    if cfg.delta_pa == 0:
        raise DomainError("Rate expressions need a nonzero pump-atom detuning.")
    return cfg.omega_p**2 / (4 * cfg.delta_pa**2)


def gamma_c(cfg: DriveConfig) -> float:
    """Gamma_c = 2 kappa (Omega_p^2 / 4 Delta_pa^2) g^2 / (Delta_pc^2 + kappa^2)."""
    _check_dispersive(cfg)
    return 2 * cfg.kappa * _pump_factor(cfg) * cfg.g**2 / (cfg.delta_pc**2 + cfg.kappa**2)


def gamma_a(cfg: DriveConfig) -> float:
    """Gamma_a = 2 gamma_perp (Omega_p^2 / 4 Delta_pa^2)."""
    _check_dispersive(cfg)
    return 2 * cfg.gamma_perp * _pump_factor(cfg)


def gamma_c_doppler(cfg: DriveConfig, kv: float) -> float:
    """Cavity scattering rate with Delta_pc replaced by |Delta_pc| + kv."""
    if abs(cfg.delta_pa) < DISPERSIVE_MARGIN * abs(kv):
        logger.warning(f"Doppler shift kv={kv:.3g} rad/s is not small against Delta_pa.")
    detuning = abs(cfg.delta_pc) + kv
    return 2 * cfg.kappa * _pump_factor(cfg) * cfg.g**2 / (detuning**2 + cfg.kappa**2)


def optimal_detuning(kappa: float, kv: float = 0.0) -> float:
    """Optimal |Delta_pc| for a counter-propagating pump pair, kappa + |kv|."""
    return kappa + abs(kv)


def cooling_power(cfg: DriveConfig, v: float, k: float) -> float:
    """
    Kinetic energy removal rate hbar k v Gamma_c in W.

    Gamma_c is evaluated at the Doppler-shifted detuning |Delta_pc| - k|v| of
    the moving particle.
    """
    _check_dispersive(cfg)
    return HBAR * k * v * gamma_c_doppler(cfg, -abs(k * v))


def cooling_rate(cfg: DriveConfig, v: float, k: float, mass: float) -> float:
    """
    Energy damping rate hbar k v Gamma_c(-k|v|) / E with E = m v^2 / 2.

    Raises:
        DomainError: if v is within a factor of ten of the recoil velocity hbar k / m.
    """
    recoil_velocity = HBAR * k / mass
    if abs(v) < RECOIL_VELOCITY_MARGIN * recoil_velocity:
        raise DomainError(
            f"Velocity {v:.3g} m/s is below {RECOIL_VELOCITY_MARGIN:g}x the recoil "
            f"velocity {recoil_velocity:.3g} m/s."
        )
    return cooling_power(cfg, abs(v), k) / (mass * v**2 / 2)


def max_force(cfg: DriveConfig, v0: Sequence[float], k: float) -> float:
    """
    Maximum cooling power on a particle moving in the pump-cavity plane.

    v0 is (v_x, v_z) with x along the pump and z along the cavity axis. The
    scattered photon carries the Doppler shift (k_x -/+ k_z).v0; the branch with
    the larger removal is returned as a non-positive power in W.
    """
    v_x, v_z = float(v0[0]), float(v0[1])
    powers = []
    for projection in (k * (v_x - v_z), k * (v_x + v_z)):
        shift = abs(projection)
        powers.append(-HBAR * gamma_c_doppler(cfg, -shift) * shift)
    return min(powers)


def _ratio_array(
    kappa: NDArray[np.float64],
    delta_pc: NDArray[np.float64],
    gamma: NDArray[np.float64],
    delta_pa: NDArray[np.float64],
    g: NDArray[np.float64],
    omega_rec: float,
    gamma_perp: NDArray[np.float64],
) -> NDArray[np.float64]:
    z_c = -kappa + 1j * delta_pc
    z_a = -gamma + 1j * delta_pa
    d = z_c * z_a + g**2
    d_abs2 = np.abs(d) ** 2
    if np.any(d_abs2 == 0):
        raise SingularityError("Damping ratio denominator D vanishes.")
    numerator = np.imag(np.conj(d) ** 2 * (z_c**2 - g**2))
    scale = omega_rec / gamma_perp
    result: NDArray[np.float64] = scale * numerator / (d_abs2 * np.abs(z_c) ** 2)
    return result


def damping_ratio(cfg: DriveConfig, omega_rec: float) -> float:
    """
    Ratio of the velocity damping rate to the spontaneous emission rate.

    Negative values mean cooling. z_a carries the full gamma.
    """
    value = _ratio_array(
        np.asarray(cfg.kappa),
        np.asarray(cfg.delta_pc),
        np.asarray(cfg.gamma),
        np.asarray(cfg.delta_pa),
        np.asarray(cfg.g),
        omega_rec,
        np.asarray(cfg.gamma_perp),
    )
    return float(value)


def dressed_energy_shift(g: float, delta_pa: float, n_particles: int = 1) -> float:
    """N g^2 / Delta_pa, the shift of the cavity-like dressed state."""
    if delta_pa == 0:
        raise DomainError("Dressed-state shift needs a nonzero pump-atom detuning.")
    return n_particles * g**2 / delta_pa


def lower_dressed_detuning(g: float, delta_pa: float, kappa: float, n_particles: int = 1) -> float:
    """Delta_pc that puts the pump kappa below the shifted dressed state."""
    return dressed_energy_shift(g, delta_pa, n_particles) - kappa


def dressed_composition(cfg: DriveConfig, n_particles: int = 1) -> DressedState:
    """
    Dispersive dressed-state weights, |c_a|^2 = g^2 / Delta_pa^2.

    Raises:
        DomainError: if |g / Delta_pa| >= 1.
    """
    if cfg.delta_pa == 0 or abs(cfg.g / cfg.delta_pa) >= 1:
        raise DomainError(
            f"Dispersive composition needs |g/Delta_pa| < 1, got g={cfg.g:.3g}, "
            f"Delta_pa={cfg.delta_pa:.3g}."
        )
    _check_dispersive(cfg)
    ca2 = cfg.g**2 / cfg.delta_pa**2
    return DressedState(
        ce2=1 - ca2,
        ca2=ca2,
        energy_shift=dressed_energy_shift(cfg.g, cfg.delta_pa, n_particles),
    )


def temperature_limits(cfg: DriveConfig, transition: Transition) -> Tuple[float, float]:
    """
    Cavity cooling temperature scale and recoil temperature in K.

    t_f = hbar kappa (1 + 1/C) / k_B is infinite for C = 0.
    """
    cooperativity = single_cooperativity(cfg.g, cfg.kappa, cfg.gamma_perp)
    if cooperativity == 0:
        t_f = math.inf
    else:
        t_f = HBAR * cfg.kappa * (1 + 1 / cooperativity) / K_B
    t_rec = HBAR * transition.omega_rec / K_B
    return t_f, t_rec


def rate_report(cfg: DriveConfig, transition: Transition) -> RateReport:
    """Collect rates and temperature scales for one operating point."""
    rate_c = gamma_c(cfg)
    rate_a = gamma_a(cfg)
    t_f, t_rec = temperature_limits(cfg, transition)
    return RateReport(
        gamma_c=rate_c,
        gamma_a=rate_a,
        ratio_C=rate_c / rate_a if rate_a > 0 else None,
        t_f=t_f,
        t_rec=t_rec,
        optimal_delta_pc=-optimal_detuning(cfg.kappa),
        capture_range=cfg.kappa,
    )


def log_grid(start: float, stop: float, num: int) -> NDArray[np.float64]:
    """Log-spaced grid that keeps the sign of same-signed endpoints."""
    if num < 1:
        raise DomainError(f"Grid needs at least one point, got {num}.")
    if start == 0 or stop == 0 or (start > 0) != (stop > 0):
        raise DomainError(f"Log grid endpoints must share a sign, got {start}, {stop}.")
    sign = 1.0 if start > 0 else -1.0
    grid: NDArray[np.float64] = sign * np.geomspace(abs(start), abs(stop), num)
    return grid


def refine_grid(grid: NDArray[np.float64]) -> NDArray[np.float64]:
    """Insert the log midpoint between neighbours, 2n - 1 points."""
    if grid.size < 2:
        return grid.copy()
    return log_grid(float(grid[0]), float(grid[-1]), 2 * grid.size - 1)


@dataclass(frozen=True)
class DampingMap:
    """Damping ratio over cooperativity (rows) and pump-atom detuning (columns)."""

    cooperativity: NDArray[np.float64]
    delta_pa: NDArray[np.float64]
    ratio: NDArray[np.float64]

    def rows(self) -> Iterator[Dict[str, Any]]:
        for i, c_value in enumerate(self.cooperativity):
            for j, detuning in enumerate(self.delta_pa):
                yield {
                    "delta_pa_hz": float(detuning) / (2 * math.pi),
                    "cooperativity": float(c_value),
                    "ratio": float(self.ratio[i, j]),
                }


def damping_map(
    kappa: float,
    gamma_perp: float,
    omega_rec: float,
    cooperativity: NDArray[np.float64],
    delta_pa: NDArray[np.float64],
) -> DampingMap:
    """
    Damping ratio map with g = sqrt(2 kappa gamma_perp C) and the pump kappa
    below the lower dressed state, Delta_pc = g^2 / Delta_pa - kappa.
    """
    c_grid, d_grid = np.meshgrid(
        np.asarray(cooperativity, dtype=float), np.asarray(delta_pa, dtype=float), indexing="ij"
    )
    if np.any(d_grid == 0):
        raise DomainError("Damping map detuning grid must exclude zero.")
    g = np.sqrt(2 * kappa * gamma_perp * c_grid)
    delta_pc = g**2 / d_grid - kappa
    ratio = _ratio_array(
        np.full_like(c_grid, kappa),
        delta_pc,
        np.full_like(c_grid, 2 * gamma_perp),
        d_grid,
        g,
        omega_rec,
        np.full_like(c_grid, gamma_perp),
    )
    logger.debug(f"Damping map {ratio.shape}: {int(np.sum(ratio < 0))} cooling cells.")
    return DampingMap(
        cooperativity=np.asarray(cooperativity, dtype=float),
        delta_pa=np.asarray(delta_pa, dtype=float),
        ratio=ratio,
    )


def _nearest_index(coarse: NDArray[np.float64], fine: NDArray[np.float64]) -> NDArray[np.intp]:
    log_coarse = np.log(np.abs(coarse))
    log_fine = np.log(np.abs(fine))
    index: NDArray[np.intp] = np.argmin(np.abs(log_fine[:, None] - log_coarse[None, :]), axis=1)
    return index


def sign_agreement(coarse: DampingMap, fine: DampingMap) -> float:
    """Fraction of fine cells whose sign matches the nearest coarse node."""
    rows = _nearest_index(coarse.cooperativity, fine.cooperativity)
    cols = _nearest_index(coarse.delta_pa, fine.delta_pa)
    coarse_sign = np.sign(coarse.ratio[np.ix_(rows, cols)])
    return float(np.mean(coarse_sign == np.sign(fine.ratio)))


def largest_cooling_region(damping: DampingMap) -> float:
    """Share of cooling cells that lie in the largest connected cooling region."""
    labels, count = ndimage.label(damping.ratio < 0)
    if count == 0:
        return 0.0
    sizes: List[int] = [int(np.sum(labels == label)) for label in range(1, count + 1)]
    return max(sizes) / int(np.sum(damping.ratio < 0))
