# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""
Confocal multimode cavity enhancement.

The degenerate transverse modes of a confocal cavity are treated as one
super-mode with coupling g_eff = n_eff * g0, so the cooperativity grows by
n_eff^2 up to the spherical-aberration limit C_sa.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List

from scipy.special import gammaln

from cavitycool.errors import DomainError
from cavitycool.units import (
    CavityGeometry,
    Transition,
    aberration_n_eff,
    aberration_waist,
    derive_cavity,
    hz,
    wavenumber,
)


logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "F",
    "R_m",
    "kappa_hz",
    "g0_hz",
    "w0_m",
    "w_sa_m",
    "c_single",
    "c_sa",
    "n_eff",
    "fom_m2",
]


def _check_aberration_regime(finesse: float, radius: float, k: float) -> None:
    if finesse >= k * radius:
        logger.warning(
            f"F={finesse:g} is not below kR={k * radius:.4g}; aberration-limited "
            "formulas are outside their range."
        )


def c_sa_scattering(finesse: float, radius: float, wavelength: float) -> float:
    """3 sqrt(2F / (pi k R)), the aberration limit in scattering normalization."""
    k = wavenumber(wavelength)
    _check_aberration_regime(finesse, radius, k)
    return 3 * math.sqrt(2 * finesse / (math.pi * k * radius))


def c_sa(finesse: float, radius: float, wavelength: float) -> float:
    """
    Aberration-limited cooperativity, Purcell normalization.

    Equals purcell_factor * n_eff^2 = 12 sqrt(2F / (pi k R)), four times the
    scattering form.
    """
    return 4 * c_sa_scattering(finesse, radius, wavelength)


def n_eff_aberration(finesse: float, radius: float, wavelength: float) -> float:
    """(pi k R / 2F)^(1/4)."""
    if finesse <= 0 or radius <= 0:
        raise DomainError(f"Finesse and radius must be positive, got F={finesse}, R={radius}.")
    return aberration_n_eff(finesse, radius, wavenumber(wavelength))


def max_mode_index(mode_count: float) -> int:
    """M' for M = (M'+1)^2 modes, rounded to the nearest integer."""
    if mode_count < 1:
        raise DomainError(f"Mode count must be at least 1, got {mode_count}.")
    return max(0, round(math.sqrt(mode_count) - 1))


def n_eff_modecount(mode_count: float) -> float:
    """
    (2M'+1)!! / (2M')!! for M = (M'+1)^2 modes, evaluated as
    2 Gamma(M'+3/2) / (sqrt(pi) Gamma(M'+1)) in the log domain.

    >>> n_eff_modecount(1)
    1.0
    """
    m_prime = max_mode_index(mode_count)
    log_value = gammaln(m_prime + 1.5) - gammaln(m_prime + 1) + math.log(2 / math.sqrt(math.pi))
    return round(math.exp(log_value), 12)


def n_eff_modecount_asymptotic(m_prime: int) -> float:
    """sqrt(2 (2M'+1) / pi), the large-M' form."""
    return math.sqrt(2 * (2 * m_prime + 1) / math.pi)


def mode_count_for(n_eff: float) -> int:
    """Mode count M whose asymptotic enhancement is closest to n_eff."""
    m_prime = max(0, round((math.pi * n_eff**2 / 2 - 1) / 2))
    return (m_prime + 1) ** 2


def solid_angle(k: float, waist: float) -> float:
    """Delta_Omega = 3 / (k^2 w0^2) captured by one TEM00 mode."""
    return 3 / (k**2 * waist**2)


def solid_angle_confocal(k: float, waist: float, n_eff: float) -> float:
    """Delta_Omega_sa = 8 n_eff Delta_Omega / 3."""
    return 8 * n_eff * solid_angle(k, waist) / 3


@dataclass(frozen=True)
class ConfocalReport:
    """Derived parameters of a confocal cavity for one transition."""

    finesse: float
    radius: float
    degradation: float
    kappa: float
    g0: float
    w0: float
    w_sa: float
    c_single: float
    purcell: float
    c_sa: float
    c_sa_ideal: float
    c_sa_scattering: float
    n_eff_aberration: float
    n_eff: float
    n_eff_modecount: float
    mode_count_M: int
    figure_of_merit: float
    delta_omega: float
    delta_omega_sa: float
    delta_omega_sa_over_delta_omega: float

    @property
    def g_eff(self) -> float:
        return self.n_eff * self.g0

    @property
    def length(self) -> float:
        return self.radius

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def confocal_report(
    transition: Transition, finesse: float, radius: float, degradation: float = 1.0
) -> ConfocalReport:
    """
    Evaluate a confocal L = R cavity.

    `degradation` is the realized fraction of the ideal cooperativity gain:
    c_sa = degradation * c_sa_ideal and n_eff = sqrt(degradation) * n_eff_ideal.
    """
    cavity = CavityGeometry.confocal(radius, finesse, degradation)
    derived = derive_cavity(transition, cavity)
    k = transition.k
    mode_count = mode_count_for(derived.n_eff_ideal)
    delta_omega = solid_angle(k, derived.w0)
    delta_omega_sa = solid_angle_confocal(k, derived.w0, derived.n_eff_ideal)
    ideal = c_sa(finesse, radius, transition.lambda_ae)

    report = ConfocalReport(
        finesse=finesse,
        radius=radius,
        degradation=degradation,
        kappa=derived.kappa,
        g0=derived.g0,
        w0=derived.w0,
        w_sa=aberration_waist(finesse, radius, k),
        c_single=derived.c_single,
        purcell=derived.purcell,
        c_sa=derived.c_sa,
        c_sa_ideal=ideal,
        c_sa_scattering=ideal / 4,
        n_eff_aberration=derived.n_eff_ideal,
        n_eff=derived.n_eff,
        n_eff_modecount=n_eff_modecount(mode_count),
        mode_count_M=mode_count,
        figure_of_merit=derived.c_sa * math.pi * derived.w0**2,
        delta_omega=delta_omega,
        delta_omega_sa=delta_omega_sa,
        delta_omega_sa_over_delta_omega=delta_omega_sa / delta_omega,
    )
    if report.w_sa < report.w0:
        logger.warning(
            f"Aberration waist {report.w_sa:.3g} m is below the TEM00 waist {report.w0:.3g} m."
        )
    return report


def sweep_row(report: ConfocalReport) -> Dict[str, float]:
    return {
        "F": report.finesse,
        "R_m": report.radius,
        "kappa_hz": hz(report.kappa),
        "g0_hz": hz(report.g0),
        "w0_m": report.w0,
        "w_sa_m": report.w_sa,
        "c_single": report.c_single,
        "c_sa": report.c_sa,
        "n_eff": report.n_eff,
        "fom_m2": report.figure_of_merit,
    }


def design_sweep(
    transition: Transition,
    f_grid: Iterable[float],
    r_grid: Iterable[float],
    degradation: float = 1.0,
) -> List[Dict[str, float]]:
    """
    Confocal design table over finesse and radius.

    Rows are sorted by figure of merit, descending; ties go to the larger R,
    then the larger F.
    """
    finesses = list(f_grid)
    radii = list(r_grid)
    if not finesses or not radii:
        raise DomainError("Design sweep needs non-empty finesse and radius grids.")
    rows = [
        sweep_row(confocal_report(transition, finesse, radius, degradation))
        for finesse in finesses
        for radius in radii
    ]
    logger.debug(f"Design sweep evaluated {len(rows)} cavities")
    return sorted(rows, key=lambda row: (-row["fom_m2"], -row["R_m"], -row["F"]))
