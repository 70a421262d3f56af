# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""
Exact master-equation solver on a truncated Fock space.

One two- or three-level particle coupled to one cavity mode, in the frame
rotating at the pump frequency:

    H = -Delta_pa s+s- - Delta_pc a+a + g (a+ s- + s+ a)
        + Omega_p (s+ + s-) / 2 + Omega_d (a + a+) / 2

with cavity loss 2 kappa D[a]. The two-level atom decays by gamma D[s-]; the
three-level atom splits gamma into a Rayleigh jump |a><e| and a Raman jump
|b><e| into a dark state |b>. Density matrices are vectorized row-major, so
vec(A rho B) = (A kron B^T) vec(rho).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.integrate import cumulative_trapezoid
from scipy.linalg import expm

from cavitycool.errors import ConvergenceError, CutoffError, DomainError, NumericalError
from cavitycool.molecule import three_level_decay_rates
from cavitycool.steadystate import DriveConfig, saturation, solve_self_consistent
from cavitycool.units import single_cooperativity


logger = logging.getLogger(__name__)

DEFAULT_FOCK_CUTOFF = 8
STEP_FRACTION = 0.02
DRIFT_TOLERANCE = 1e-10
MIN_HORIZON_LIFETIMES = 50.0
MAX_DOUBLINGS = 80
TOP_POPULATION_LIMIT = 1e-4
NEGATIVITY_TOLERANCE = 1e-10
STATE_TOLERANCE = 1e-10

GROUND, EXCITED, SHELVED = 0, 1, 2

ComplexArray = NDArray[np.complex128]


class LiouvillianModel(BaseModel):
    """A driven particle-cavity system on a truncated Hilbert space."""

    model_config = ConfigDict(frozen=True)

    cfg: DriveConfig
    levels: int = 2
    fock_cutoff: int = Field(default=DEFAULT_FOCK_CUTOFF, ge=2)
    gamma_ry: float = Field(default=0.0, ge=0)
    gamma_rn: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def check_levels(self) -> "LiouvillianModel":
        if self.levels not in (2, 3):
            raise ValueError(f"levels must be 2 or 3, got {self.levels}")
        if self.levels == 3 and self.gamma_ry + self.gamma_rn <= 0:
            raise ValueError("three-level model needs gamma_ry + gamma_rn > 0")
        return self

    @classmethod
    def three_level(
        cls, cfg: DriveConfig, upsilon: float, fock_cutoff: int = DEFAULT_FOCK_CUTOFF
    ) -> "LiouvillianModel":
        """Split the drive's gamma = 2 gamma_perp by the Rayleigh-to-Raman ratio."""
        gamma_ry, gamma_rn = three_level_decay_rates(cfg.gamma, upsilon)
        return cls(cfg=cfg, levels=3, fock_cutoff=fock_cutoff, gamma_ry=gamma_ry, gamma_rn=gamma_rn)

    @property
    def n_fock(self) -> int:
        return self.fock_cutoff + 1

    @property
    def dim(self) -> int:
        return self.levels * self.n_fock


def _projector(levels: int, row: int, col: int) -> ComplexArray:
    op = np.zeros((levels, levels), dtype=complex)
    op[row, col] = 1.0
    return op


def _annihilation(n_fock: int) -> ComplexArray:
    return np.diag(np.sqrt(np.arange(1, n_fock)), k=1).astype(complex)


@dataclass(frozen=True)
class Operators:
    """Operators on the atom (x) field space."""

    a: ComplexArray
    sigma: ComplexArray
    excited: ComplexArray
    shelved: Optional[ComplexArray]
    top_fock: ComplexArray


def operators(model: LiouvillianModel) -> Operators:
    atom_eye = np.eye(model.levels, dtype=complex)
    field_eye = np.eye(model.n_fock, dtype=complex)
    top = np.zeros((model.n_fock, model.n_fock), dtype=complex)
    top[-1, -1] = 1.0
    return Operators(
        a=np.kron(atom_eye, _annihilation(model.n_fock)),
        sigma=np.kron(_projector(model.levels, GROUND, EXCITED), field_eye),
        excited=np.kron(_projector(model.levels, EXCITED, EXCITED), field_eye),
        shelved=(
            np.kron(_projector(model.levels, SHELVED, SHELVED), field_eye)
            if model.levels == 3
            else None
        ),
        top_fock=np.kron(atom_eye, top),
    )


def hamiltonian(model: LiouvillianModel) -> ComplexArray:
    cfg = model.cfg
    ops = operators(model)
    a, sigma = ops.a, ops.sigma
    a_dag, sigma_dag = a.conj().T, sigma.conj().T
    h: ComplexArray = (
        -cfg.delta_pa * ops.excited
        - cfg.delta_pc * (a_dag @ a)
        + cfg.g * (a_dag @ sigma + sigma_dag @ a)
        + cfg.omega_p / 2 * (sigma + sigma_dag)
        + cfg.omega_d / 2 * (a + a_dag)
    )
    return h


def _dissipator(c: ComplexArray) -> ComplexArray:
    eye = np.eye(c.shape[0], dtype=complex)
    c_dag_c = c.conj().T @ c
    result: ComplexArray = np.kron(c, c.conj()) - 0.5 * (
        np.kron(c_dag_c, eye) + np.kron(eye, c_dag_c.T)
    )
    return result


def liouvillian(model: LiouvillianModel) -> ComplexArray:
    """Dense superoperator acting on row-major vec(rho)."""
    cfg = model.cfg
    ops = operators(model)
    h = hamiltonian(model)
    eye = np.eye(model.dim, dtype=complex)
    lindblad: ComplexArray = -1j * (np.kron(h, eye) - np.kron(eye, h.T))
    lindblad += 2 * cfg.kappa * _dissipator(ops.a)
    if model.levels == 2:
        lindblad += cfg.gamma * _dissipator(ops.sigma)
    else:
        field_eye = np.eye(model.n_fock, dtype=complex)
        rayleigh = np.kron(_projector(3, GROUND, EXCITED), field_eye)
        raman = np.kron(_projector(3, SHELVED, EXCITED), field_eye)
        lindblad += model.gamma_ry * _dissipator(rayleigh)
        lindblad += model.gamma_rn * _dissipator(raman)
    return lindblad


def ground_state(model: LiouvillianModel) -> ComplexArray:
    """Atom in |a>, cavity in vacuum."""
    rho = np.zeros((model.dim, model.dim), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def _max_rate(model: LiouvillianModel) -> float:
    cfg = model.cfg
    root_n = np.sqrt(model.n_fock)
    return float(
        max(
            abs(cfg.delta_pa),
            abs(cfg.delta_pc),
            cfg.g * root_n,
            cfg.omega_p,
            cfg.omega_d * root_n,
            cfg.kappa,
            cfg.gamma,
            1.0,
        )
    )


def evolve(
    model: LiouvillianModel, rho0: ComplexArray, times: Sequence[float]
) -> NDArray[np.complex128]:
    """
    Density matrices at each of `times` (ascending, measured from rho0 at t=0),
    using exact propagators expm(L dt).
    """
    grid = np.asarray(times, dtype=float)
    if grid.size == 0:
        raise DomainError("evolve needs at least one time.")
    if np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise DomainError("evolve times must be non-negative and ascending.")
    lindblad = liouvillian(model)
    states = np.empty((grid.size, model.dim, model.dim), dtype=complex)
    vec = np.asarray(rho0, dtype=complex).reshape(-1)
    previous = 0.0
    cached_dt: Optional[float] = None
    propagator: Optional[ComplexArray] = None
    for index, t in enumerate(grid):
        dt = float(t - previous)
        if dt > 0:
            if propagator is None or cached_dt is None or not np.isclose(dt, cached_dt, rtol=1e-12):
                propagator = expm(lindblad * dt)
                cached_dt = dt
            vec = propagator @ vec
        states[index] = vec.reshape(model.dim, model.dim)
        previous = float(t)
    return states


@dataclass(frozen=True)
class OracleSteadyState:
    """Observables of the exact steady state."""

    alpha_q: complex
    zeta_q: complex
    n_photon: float
    sigma_ee_q: float
    cavity_flux: float
    p_shelved: float
    top_population: float
    horizon: float
    rho: ComplexArray = field(repr=False, compare=False)


def expectation(op: ComplexArray, rho: ComplexArray) -> complex:
    return complex(np.trace(op @ rho))


def _validate_state(model: LiouvillianModel, rho: ComplexArray) -> ComplexArray:
    """Check trace and Hermiticity of rho as computed, then symmetrize and test positivity."""
    trace = complex(np.trace(rho))
    if not np.isfinite(trace) or abs(trace - 1) > STATE_TOLERANCE:
        raise NumericalError(f"Steady state has trace {trace:.12g}, expected 1.")
    asymmetry = float(np.max(np.abs(rho - rho.conj().T)))
    if not np.isfinite(asymmetry) or asymmetry > STATE_TOLERANCE:
        raise NumericalError(f"Steady state is not Hermitian (max |rho - rho+| {asymmetry:.3e}).")
    rho = (rho + rho.conj().T) / 2
    rho = rho / trace.real
    min_eigenvalue = float(np.min(np.linalg.eigvalsh(rho)))
    if min_eigenvalue < -NEGATIVITY_TOLERANCE:
        raise NumericalError(
            f"Steady state is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})."
        )
    return rho


def _observe(model: LiouvillianModel, rho: ComplexArray, horizon: float) -> OracleSteadyState:
    ops = operators(model)
    n_photon = float(np.real(expectation(ops.a.conj().T @ ops.a, rho)))
    top_population = float(np.real(expectation(ops.top_fock, rho)))
    if top_population > TOP_POPULATION_LIMIT:
        raise CutoffError(top_population, model.fock_cutoff)
    if n_photon >= 0.1 * model.fock_cutoff:
        logger.warning(
            f"Mean photon number {n_photon:.3g} is close to the Fock cutoff {model.fock_cutoff}."
        )
    return OracleSteadyState(
        alpha_q=expectation(ops.a, rho),
        zeta_q=expectation(ops.sigma, rho),
        n_photon=n_photon,
        sigma_ee_q=float(np.real(expectation(ops.excited, rho))),
        cavity_flux=2 * model.cfg.kappa * n_photon,
        p_shelved=float(np.real(expectation(ops.shelved, rho))) if ops.shelved is not None else 0.0,
        top_population=top_population,
        horizon=horizon,
        rho=rho,
    )


def steady_state(
    model: LiouvillianModel, rho0: Optional[ComplexArray] = None
) -> OracleSteadyState:
    """
    Long-time limit of the master equation.

    The propagator over dt = 0.02 / (fastest rate) is squared repeatedly,
    doubling the horizon, until rho changes by less than 1e-10 between
    successive horizons and the horizon spans at least fifty of the slowest
    lifetimes.

    Raises:
        ConvergenceError: if the drift does not settle.
        CutoffError: if the top Fock level holds more than 1e-4 population.
    """
    cfg = model.cfg
    dt = STEP_FRACTION / _max_rate(model)
    min_horizon = MIN_HORIZON_LIFETIMES / min(cfg.kappa, cfg.gamma_perp)
    propagator = expm(liouvillian(model) * dt)
    start = ground_state(model) if rho0 is None else np.asarray(rho0, dtype=complex)
    diagonal = slice(None, None, model.dim + 1)
    vec = propagator @ start.reshape(-1)
    horizon = dt
    drift = float("inf")
    for doubling in range(MAX_DOUBLINGS):
        updated = propagator @ vec
        # repeated squaring lets the trace creep away from one
        updated = updated / np.sum(updated[diagonal])
        drift = float(np.max(np.abs(updated - vec)))
        vec = updated
        horizon *= 2
        if drift < DRIFT_TOLERANCE and horizon >= min_horizon:
            logger.debug(f"Oracle steady state after {doubling + 1} doublings, t={horizon:.3e} s")
            rho = _validate_state(model, vec.reshape(model.dim, model.dim))
            return _observe(model, rho, horizon)
        propagator = propagator @ propagator
    raise ConvergenceError(
        f"Oracle steady state did not settle (drift {drift:.3e} at t={horizon:.3e} s).",
        residual=drift,
        iterations=MAX_DOUBLINGS,
    )


@dataclass(frozen=True)
class ShelvingResult:
    """Population and photon-count time series of a three-level run."""

    times: NDArray[np.float64]
    p_ground: NDArray[np.float64]
    p_excited: NDArray[np.float64]
    p_shelved: NDArray[np.float64]
    n_photon: NDArray[np.float64]
    cavity_flux: NDArray[np.float64]
    cavity_photons: NDArray[np.float64]
    free_space_scatters: NDArray[np.float64]
    t_half: Optional[float]
    cavity_photons_at_half: Optional[float]

    @property
    def cavity_photons_per_shelving(self) -> float:
        """Emitted cavity photons per shelved molecule at the end of the run."""
        return float(self.cavity_photons[-1] / self.p_shelved[-1])

    @property
    def free_scatters_per_shelving(self) -> float:
        return float(self.free_space_scatters[-1] / self.p_shelved[-1])

    def rows(self) -> List[Dict[str, float]]:
        return [
            {
                "t": float(self.times[i]),
                "p_ground": float(self.p_ground[i]),
                "p_excited": float(self.p_excited[i]),
                "p_shelved": float(self.p_shelved[i]),
                "cavity_photons": float(self.cavity_photons[i]),
            }
            for i in range(self.times.size)
        ]


def shelving_dynamics(
    model: LiouvillianModel, t_max: float, n_steps: int = 2000
) -> ShelvingResult:
    """
    Evolve a three-level model from |a, 0> and count photons until shelving.

    Cavity photons are the time integral of 2 kappa <a+a>; free-space
    scatters integrate gamma <s+s->.
    """
    if model.levels != 3:
        raise DomainError("Shelving dynamics needs a three-level model.")
    if t_max <= 0 or n_steps < 2:
        raise DomainError(f"Need t_max > 0 and n_steps >= 2, got {t_max}, {n_steps}.")
    times = np.linspace(0.0, t_max, n_steps + 1)
    states = evolve(model, ground_state(model), times)
    ops = operators(model)
    assert ops.shelved is not None
    number = ops.a.conj().T @ ops.a
    ground_op = np.eye(model.dim, dtype=complex) - ops.excited - ops.shelved

    def trace_series(op: ComplexArray) -> NDArray[np.float64]:
        series: NDArray[np.float64] = np.real(np.einsum("ij,tji->t", op, states))
        return series

    p_excited = trace_series(ops.excited)
    p_shelved = trace_series(ops.shelved)
    n_photon = trace_series(number)
    flux = 2 * model.cfg.kappa * n_photon
    cavity_photons = cumulative_trapezoid(flux, times, initial=0.0)
    free_space = cumulative_trapezoid(model.cfg.gamma * p_excited, times, initial=0.0)

    t_half: Optional[float] = None
    photons_at_half: Optional[float] = None
    if p_shelved[-1] >= 0.5:
        t_half = float(np.interp(0.5, p_shelved, times))
        photons_at_half = float(np.interp(t_half, times, cavity_photons))
    else:
        logger.warning(f"Shelved population reached only {p_shelved[-1]:.3f} by t={t_max:.3e} s")

    return ShelvingResult(
        times=times,
        p_ground=trace_series(ground_op),
        p_excited=p_excited,
        p_shelved=p_shelved,
        n_photon=n_photon,
        cavity_flux=flux,
        cavity_photons=cavity_photons,
        free_space_scatters=free_space,
        t_half=t_half,
        cavity_photons_at_half=photons_at_half,
    )


@dataclass(frozen=True)
class OracleComparison:
    """Semiclassical and exact observables at one operating point."""

    s: float
    cooperativity: float
    alpha_sc: complex
    alpha_q: complex
    sigma_ee_sc: float
    sigma_ee_q: float
    n_photon_q: float

    @property
    def alpha_rel_error(self) -> float:
        return abs(self.alpha_q - self.alpha_sc) / abs(self.alpha_q)

    @property
    def sigma_ee_rel_error(self) -> float:
        return abs(self.sigma_ee_q - self.sigma_ee_sc) / self.sigma_ee_q

    def to_row(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "cooperativity": self.cooperativity,
            "alpha_sc_re": self.alpha_sc.real,
            "alpha_sc_im": self.alpha_sc.imag,
            "alpha_q_re": self.alpha_q.real,
            "alpha_q_im": self.alpha_q.imag,
            "alpha_rel_error": self.alpha_rel_error,
            "sigma_ee_sc": self.sigma_ee_sc,
            "sigma_ee_q": self.sigma_ee_q,
            "sigma_ee_rel_error": self.sigma_ee_rel_error,
            "n_photon_q": self.n_photon_q,
        }


def compare(cfg: DriveConfig, fock_cutoff: int = DEFAULT_FOCK_CUTOFF) -> OracleComparison:
    """Self-consistent semiclassical solution against the exact steady state."""
    semiclassical = solve_self_consistent(cfg)
    exact = steady_state(LiouvillianModel(cfg=cfg, fock_cutoff=fock_cutoff))
    return OracleComparison(
        s=saturation(cfg),
        cooperativity=single_cooperativity(cfg.g, cfg.kappa, cfg.gamma_perp),
        alpha_sc=semiclassical.alpha,
        alpha_q=exact.alpha_q,
        sigma_ee_sc=semiclassical.sigma_ee,
        sigma_ee_q=exact.sigma_ee_q,
        n_photon_q=exact.n_photon,
    )
