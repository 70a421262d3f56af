# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Factorized semiclassical steady state of a driven particle-cavity system."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from cavitycool.errors import ConvergenceError, DomainError, SingularityError


logger = logging.getLogger(__name__)

DEFAULT_DAMPING = 0.5
DEFAULT_MAX_ITERATIONS = 10_000
DEFAULT_TOLERANCE = 1e-12
BISTABILITY_TOLERANCE = 1e-6
CLOSED_FORM_WARN_SATURATION = 0.1


class DriveConfig(BaseModel):
    """Pump/drive strengths and detunings of one operating point, all in rad/s."""

    model_config = ConfigDict(frozen=True)

    omega_p: float = Field(ge=0, description="Pump Rabi frequency")
    omega_d: float = Field(default=0.0, ge=0, description="Cavity drive strength")
    delta_pa: float = Field(description="Pump-atom detuning w_p - w_a")
    delta_pc: float = Field(description="Pump-cavity detuning w_p - w_c")
    g: float = Field(ge=0, description="Coupling at the particle position")
    gamma_perp: float = Field(gt=0)
    kappa: float = Field(gt=0)

    @property
    def delta_ca(self) -> float:
        """Cavity-atom detuning Delta_pc - Delta_pa, i.e. w_a - w_c."""
        return self.delta_pc - self.delta_pa

    @property
    def gamma(self) -> float:
        return 2 * self.gamma_perp

    def with_(self, **update: Any) -> "DriveConfig":
        """Validated copy with some fields replaced."""
        return DriveConfig.model_validate({**self.model_dump(), **update})


@dataclass(frozen=True)
class SteadyState:
    """Self-consistent field amplitude, atomic coherence and excited population."""

    alpha: complex
    zeta: complex
    sigma_ee: float
    n_c_bare: float
    s: float
    converged: bool
    iterations: int
    multivalued: bool = False
    alt_alpha: Optional[complex] = None


def bare_photon_number(cfg: DriveConfig) -> float:
    """Empty-cavity photon number (Omega_d^2/4) / (kappa^2 + Delta_pc^2)."""
    return (cfg.omega_d**2 / 4) / (cfg.kappa**2 + cfg.delta_pc**2)


def saturation(cfg: DriveConfig) -> float:
    """s = (Omega_p^2/2) / (Delta_pa^2 + gamma^2/4), without cavity field."""
    return (cfg.omega_p**2 / 2) / (cfg.delta_pa**2 + cfg.gamma**2 / 4)


def pump_for_saturation(s: float, delta_pa: float, gamma_perp: float) -> float:
    """Pump Rabi frequency giving saturation `s`, the inverse of `saturation`."""
    if s < 0:
        raise DomainError(f"Saturation must be non-negative, got {s}.")
    return math.sqrt(2 * s * (delta_pa**2 + gamma_perp**2))


def free_space_rate(cfg: DriveConfig) -> float:
    """Gamma_a = (gamma/2) s / (1 + s)."""
    s = saturation(cfg)
    return cfg.gamma / 2 * s / (1 + s)


def effective_drives(cfg: DriveConfig, alpha: complex, zeta: complex) -> Tuple[complex, complex]:
    """Omega'_p = 2 g alpha + Omega_p and Omega'_d = 2 g zeta + Omega_d."""
    return 2 * cfg.g * alpha + cfg.omega_p, 2 * cfg.g * zeta + cfg.omega_d


def _coherence(cfg: DriveConfig, omega_p_eff: complex) -> complex:
    denominator = abs(omega_p_eff) ** 2 / 2 + cfg.gamma_perp**2 + cfg.delta_pa**2
    return omega_p_eff / 2 * (cfg.delta_pa - 1j * cfg.gamma_perp) / denominator


def _excited_population(cfg: DriveConfig, omega_p_eff: complex) -> float:
    denominator = abs(omega_p_eff) ** 2 / 2 + cfg.gamma_perp**2 + cfg.delta_pa**2
    return abs(omega_p_eff / 2) ** 2 / denominator


def _field(cfg: DriveConfig, omega_d_eff: complex) -> complex:
    return omega_d_eff / 2 / (cfg.delta_pc + 1j * cfg.kappa)


def _iterate(
    cfg: DriveConfig, seed: complex, damping: float, max_iterations: int, tolerance: float
) -> Tuple[complex, int]:
    alpha = seed
    residual = float("inf")
    for iteration in range(1, max_iterations + 1):
        zeta = _coherence(cfg, 2 * cfg.g * alpha + cfg.omega_p)
        target = _field(cfg, 2 * cfg.g * zeta + cfg.omega_d)
        updated = (1 - damping) * alpha + damping * target
        residual = abs(updated - alpha) / (1 + abs(alpha))
        alpha = updated
        if residual < tolerance:
            return alpha, iteration
    raise ConvergenceError(
        f"Steady state did not converge in {max_iterations} iterations "
        f"(residual {residual:.3e}).",
        residual=residual,
        iterations=max_iterations,
    )


def _saturating_seed(cfg: DriveConfig) -> complex:
    # large enough that |Omega'_p| far exceeds the atomic linewidth and detuning
    return 10 * (abs(cfg.delta_pa) + cfg.gamma_perp) / (2 * cfg.g)


def solve_self_consistent(
    cfg: DriveConfig,
    damping: float = DEFAULT_DAMPING,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    tolerance: float = DEFAULT_TOLERANCE,
    detect_bistability: bool = True,
) -> SteadyState:
    """
    Damped fixed-point solution of the coupled field and coherence equations.

    The atomic coherence uses the full saturating denominator, so the result
    holds beyond the weak-drive limit. A second iteration seeded on the
    saturated side flags multivalued (bistable) solutions without resolving them.

    Raises:
        ConvergenceError: if the iteration does not reach the tolerance.
    """
    if not 0 < damping <= 1:
        raise DomainError(f"Damping must lie in (0, 1], got {damping}.")
    alpha, iterations = _iterate(cfg, 0j, damping, max_iterations, tolerance)
    omega_p_eff = 2 * cfg.g * alpha + cfg.omega_p
    zeta = _coherence(cfg, omega_p_eff)

    multivalued = False
    alt_alpha: Optional[complex] = None
    if detect_bistability and cfg.g > 0:
        try:
            other, _ = _iterate(cfg, _saturating_seed(cfg), damping, max_iterations, tolerance)
        except ConvergenceError:
            logger.debug("Saturated-seed iteration did not converge; no second branch.")
        else:
            scale = max(abs(alpha), abs(other))
            if scale > 0 and abs(other - alpha) > BISTABILITY_TOLERANCE * scale:
                multivalued = True
                alt_alpha = other
                logger.warning(
                    f"Multivalued steady state: alpha={alpha:.4g} and alpha={other:.4g}."
                )

    return SteadyState(
        alpha=alpha,
        zeta=zeta,
        sigma_ee=_excited_population(cfg, omega_p_eff),
        n_c_bare=bare_photon_number(cfg),
        s=saturation(cfg),
        converged=True,
        iterations=iterations,
        multivalued=multivalued,
        alt_alpha=alt_alpha,
    )


def closed_form_unsaturated(cfg: DriveConfig) -> SteadyState:
    """
    Closed-form steady state in the unsaturated limit.

    Raises:
        DomainError: if s > 1.
        SingularityError: on a dressed-state resonance.
    """
    s = saturation(cfg)
    if s > 1:
        raise DomainError(f"Unsaturated closed form requires s <= 1, got s={s:.3g}.")
    if s > CLOSED_FORM_WARN_SATURATION:
        logger.warning(f"Closed form used at s={s:.3g}; expect saturation corrections.")

    atom = cfg.delta_pa + 1j * cfg.gamma_perp
    cavity = cfg.delta_pc + 1j * cfg.kappa
    denominator = atom * cavity - cfg.g**2
    scale = abs(atom) * abs(cavity) + cfg.g**2
    if abs(denominator) < 1e-30 * scale:
        raise SingularityError("Closed-form denominator vanishes on a dressed-state resonance.")

    alpha = (cfg.g * cfg.omega_p / 2 + cfg.omega_d * atom / 2) / denominator
    zeta = (2 * cfg.g * alpha + cfg.omega_p) / 2 / atom
    return SteadyState(
        alpha=alpha,
        zeta=zeta,
        sigma_ee=abs(zeta) ** 2,
        n_c_bare=bare_photon_number(cfg),
        s=s,
        converged=True,
        iterations=0,
    )
