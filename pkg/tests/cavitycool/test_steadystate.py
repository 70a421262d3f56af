# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Unit tests for the semiclassical steady state"""

import math

import pytest

from cavitycool.errors import ConvergenceError, DomainError
from cavitycool.steadystate import (
    DriveConfig,
    bare_photon_number,
    closed_form_unsaturated,
    effective_drives,
    free_space_rate,
    pump_for_saturation,
    saturation,
    solve_self_consistent,
)


def test_pump_for_saturation_inverts_saturation(weak_drive: DriveConfig) -> None:
    omega_p = pump_for_saturation(0.05, weak_drive.delta_pa, weak_drive.gamma_perp)
    assert saturation(weak_drive.with_(omega_p=omega_p)) == pytest.approx(0.05)


def test_pump_for_saturation_rejects_negative() -> None:
    with pytest.raises(DomainError):
        pump_for_saturation(-0.1, -1e8, 1e5)


def test_free_space_rate(weak_drive: DriveConfig) -> None:
    s = saturation(weak_drive)
    assert free_space_rate(weak_drive) == pytest.approx(weak_drive.gamma_perp * s / (1 + s))


def test_bare_photon_number() -> None:
    cfg = DriveConfig(
        omega_p=0.0, omega_d=4.0, delta_pa=-10.0, delta_pc=1.0, g=0.0, gamma_perp=1.0, kappa=1.0
    )
    assert bare_photon_number(cfg) == pytest.approx(2.0)


def test_empty_cavity_is_driven_by_omega_d() -> None:
    """Test the drive-only field amplitude without a coupled particle."""
    cfg = DriveConfig(
        omega_p=0.0, omega_d=4.0, delta_pa=-10.0, delta_pc=0.0, g=0.0, gamma_perp=1.0, kappa=2.0
    )
    result = solve_self_consistent(cfg)
    assert result.alpha == pytest.approx(-1j)
    assert abs(result.alpha) ** 2 == pytest.approx(result.n_c_bare)


def test_self_consistent_matches_closed_form_at_weak_drive(weak_drive: DriveConfig) -> None:
    """Test the iterative and closed-form solutions agree when s is small."""
    omega_p = pump_for_saturation(1e-4, weak_drive.delta_pa, weak_drive.gamma_perp)
    cfg = weak_drive.with_(omega_p=omega_p)

    iterative = solve_self_consistent(cfg)
    closed = closed_form_unsaturated(cfg)

    assert iterative.converged
    assert not iterative.multivalued
    assert abs(iterative.alpha - closed.alpha) / abs(closed.alpha) < 1e-3
    assert abs(iterative.zeta - closed.zeta) / abs(closed.zeta) < 1e-3
    assert iterative.sigma_ee == pytest.approx(closed.sigma_ee, rel=1e-3)


def test_saturation_lowers_excited_population(weak_drive: DriveConfig) -> None:
    """Test the self-consistent solution stays below the unsaturated estimate."""
    omega_p = pump_for_saturation(0.5, weak_drive.delta_pa, weak_drive.gamma_perp)
    cfg = weak_drive.with_(omega_p=omega_p)
    iterative = solve_self_consistent(cfg)
    closed = closed_form_unsaturated(cfg)
    assert iterative.sigma_ee < closed.sigma_ee
    assert 0 < iterative.sigma_ee < 0.5


def test_effective_drives(weak_drive: DriveConfig) -> None:
    omega_p_eff, omega_d_eff = effective_drives(weak_drive, 1 + 0j, 0.5j)
    assert omega_p_eff == pytest.approx(2 * weak_drive.g + weak_drive.omega_p)
    assert omega_d_eff == pytest.approx(1j * weak_drive.g)


def test_closed_form_rejects_saturated_drive(weak_drive: DriveConfig) -> None:
    omega_p = pump_for_saturation(2.0, weak_drive.delta_pa, weak_drive.gamma_perp)
    with pytest.raises(DomainError, match="s <= 1"):
        closed_form_unsaturated(weak_drive.with_(omega_p=omega_p))


def test_solver_reports_non_convergence(weak_drive: DriveConfig) -> None:
    with pytest.raises(ConvergenceError) as ex:
        solve_self_consistent(weak_drive, max_iterations=1)
    assert ex.value.iterations == 1


def test_solver_rejects_bad_damping(weak_drive: DriveConfig) -> None:
    with pytest.raises(DomainError):
        solve_self_consistent(weak_drive, damping=0.0)


def test_delta_ca(weak_drive: DriveConfig) -> None:
    assert weak_drive.delta_ca == pytest.approx(weak_drive.delta_pc - weak_drive.delta_pa)
    assert weak_drive.gamma == pytest.approx(2 * weak_drive.gamma_perp)


@pytest.mark.parametrize("s", [1e-3, 0.1, 1.0, 10.0])
def test_excited_population_of_bare_pump(s: float) -> None:
    """Test sigma_ee reaches (s/2) / (1 + s) for a pump-only two-level particle."""
    delta_pa, gamma_perp = -5.0, 1.0
    cfg = DriveConfig(
        omega_p=pump_for_saturation(s, delta_pa, gamma_perp),
        delta_pa=delta_pa,
        delta_pc=-1.0,
        g=0.0,
        gamma_perp=gamma_perp,
        kappa=1.0,
    )
    result = solve_self_consistent(cfg)
    bound = s / 2 / (1 + s)
    assert result.sigma_ee <= bound + 1e-12
    assert result.sigma_ee == pytest.approx(bound, rel=1e-9)
    assert result.sigma_ee < 0.5


def _resonant_drive(omega_d: float) -> DriveConfig:
    # cavity drive on the joint resonance with cooperativity g^2 / (2 kappa gamma_perp) = 20
    return DriveConfig(
        omega_p=0.0,
        omega_d=omega_d,
        delta_pa=0.0,
        delta_pc=0.0,
        g=math.sqrt(40.0),
        gamma_perp=1.0,
        kappa=1.0,
    )


def _field_residual(cfg: DriveConfig, alpha: complex) -> float:
    # |alpha| (1 + g^2 / (kappa gamma_perp (1 + 2 g^2 |alpha|^2 / gamma_perp^2)))
    #     = Omega_d / (2 kappa)
    load = cfg.g**2 / (cfg.kappa * cfg.gamma_perp)
    load /= 1 + 2 * cfg.g**2 * abs(alpha) ** 2 / cfg.gamma_perp**2
    return abs(abs(alpha) * (1 + load) - cfg.omega_d / (2 * cfg.kappa))


def test_bistable_drive_is_flagged_multivalued() -> None:
    """Test both branches of the saturable-absorber response are found."""
    cfg = _resonant_drive(3.578)
    result = solve_self_consistent(cfg, damping=0.02)

    assert result.multivalued
    assert result.alt_alpha is not None
    assert abs(result.alpha) < 0.1
    assert abs(result.alt_alpha) > 1.0
    assert _field_residual(cfg, result.alpha) < 1e-8
    assert _field_residual(cfg, result.alt_alpha) < 1e-8


@pytest.mark.parametrize("omega_d", [0.5, 8.0])
def test_single_branch_is_not_multivalued(omega_d: float) -> None:
    cfg = _resonant_drive(omega_d)
    result = solve_self_consistent(cfg, damping=0.02)
    assert not result.multivalued
    assert result.alt_alpha is None
    assert _field_residual(cfg, result.alpha) < 1e-8
