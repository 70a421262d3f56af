# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""
Stochastic semiclassical dynamics of N transversely pumped particles in a
cavity, the self-organization potentials and the superradiance thresholds.

Particles move in the z (cavity axis) / x (pump axis) plane. The field obeys

    d(alpha)/dt = i[Delta_pc - U0 sum f(kz)] alpha - [kappa + Gamma0 sum cos^2(kz)] alpha
                  - eta_eff sum cos(kz) cos(kx) + noise

with f = cos (default) or cos^2, and each particle feels the cavity lattice
hbar U0 |alpha|^2 cos^2(kz), the pump lattice hbar U0 (Omega_p/g)^2 cos^2(kx)
and the pump-cavity interference term.
"""

import logging
import math
import multiprocessing as mp
import os
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cavitycool import const
from cavitycool.errors import DomainError, InsufficientDataError, IntegrationError
from cavitycool.steadystate import DriveConfig
from cavitycool.units import HBAR, K_B


logger = logging.getLogger(__name__)

MAX_KAPPA_DT = 0.05
LOCALIZED_ORDER = 0.5
SIGN_STABILITY = 0.95
FINAL_WINDOW = 0.2
MIN_RUN_LIFETIMES = 10.0

FloatArray = NDArray[np.float64]
BoolArray = NDArray[np.bool_]


class NoiseModel(str, Enum):
    OFF = "Off"
    RECOIL_DIFFUSION = "RecoilDiffusion"


class DispersiveSum(str, Enum):
    """Position weight of the dispersive shift in the field equation."""

    COS = "cos"
    COS2 = "cos2"


class PumpAxisInit(str, Enum):
    UNIFORM = "uniform"
    ANTINODE = "antinode"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


def u0_gamma0_eta(
    g: float, delta_pa: float, gamma_perp: float, omega_p: float
) -> Tuple[float, float, complex]:
    """Dispersive shift U0, absorptive loss Gamma0 and pump strength eta_eff."""
    denominator = delta_pa**2 + gamma_perp**2
    if denominator == 0:
        raise DomainError("U0 and Gamma0 need a nonzero detuning or linewidth.")
    u0 = g**2 * delta_pa / denominator
    gamma0 = g**2 * gamma_perp / denominator
    eta = complex(g * omega_p / complex(-delta_pa * 1j + gamma_perp))
    return u0, gamma0, eta


class EnsembleConfig(BaseModel):
    """Parameters of one stochastic run. Rates in rad/s, SI otherwise."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_particles: int = Field(ge=1)
    temperature: float = Field(ge=0, description="Initial temperature (K)")
    kappa: float = Field(gt=0)
    delta_pc: float
    delta_pa: float
    g: float = Field(ge=0)
    gamma_perp: float = Field(gt=0)
    omega_p: float = Field(ge=0)
    k: float = Field(gt=0, description="Wavenumber (1/m)")
    mass: float = Field(gt=0, description="Particle mass (kg)")
    dt: float = Field(gt=0)
    duration: float = Field(gt=0)
    seed: int = 0
    noise_model: NoiseModel = NoiseModel.RECOIL_DIFFUSION
    dispersive_sum: DispersiveSum = DispersiveSum.COS
    pump_axis_init: PumpAxisInit = PumpAxisInit.UNIFORM
    omega_d: float = Field(default=0.0, ge=0, description="Seeding drive on the cavity")
    seed_phase: float = Field(default=0.0, description="Seeding phase relative to the pump (rad)")
    field_noise: float = Field(default=1.0, ge=0)
    momentum_noise: float = Field(default=1.0, ge=0)
    upsilon: Optional[float] = Field(default=None, ge=0)
    sample_every: int = Field(default=10, ge=1)
    alpha_safety: float = Field(default=10.0, gt=0)
    init_span: int = Field(default=10, ge=1, description="Initial region in wavelengths")

    @model_validator(mode="after")
    def check_stability(self) -> "EnsembleConfig":
        if self.dt * self.kappa > MAX_KAPPA_DT:
            raise ValueError(
                f"dt * kappa = {self.dt * self.kappa:.3g} exceeds the stability guard "
                f"{MAX_KAPPA_DT}"
            )
        if self.delta_pa == 0:
            raise ValueError("delta_pa must be nonzero")
        return self

    @property
    def wavelength(self) -> float:
        return 2 * math.pi / self.k

    @property
    def u0(self) -> float:
        return u0_gamma0_eta(self.g, self.delta_pa, self.gamma_perp, self.omega_p)[0]

    @property
    def gamma0(self) -> float:
        return u0_gamma0_eta(self.g, self.delta_pa, self.gamma_perp, self.omega_p)[1]

    @property
    def eta_eff(self) -> complex:
        return u0_gamma0_eta(self.g, self.delta_pa, self.gamma_perp, self.omega_p)[2]

    @property
    def pump_light_shift(self) -> float:
        """U0 (Omega_p / g)^2, finite at g = 0."""
        return self.omega_p**2 * self.delta_pa / (self.delta_pa**2 + self.gamma_perp**2)

    @property
    def gamma_a(self) -> float:
        """Free-space scattering rate 2 gamma_perp Omega_p^2 / (4 Delta_pa^2)."""
        return 2 * self.gamma_perp * self.omega_p**2 / (4 * self.delta_pa**2)

    @property
    def momentum_diffusion(self) -> float:
        """D_p = (hbar k)^2 Gamma_a / 2 per axis."""
        return (HBAR * self.k) ** 2 * self.gamma_a / 2

    @property
    def n_steps(self) -> int:
        return max(1, round(self.duration / self.dt))

    def with_(self, **update: Any) -> "EnsembleConfig":
        return EnsembleConfig.model_validate({**self.model_dump(), **update})


@dataclass(frozen=True)
class EnsembleState:
    """Positions (m), momenta (kg m/s), field amplitude and time of an ensemble."""

    z: FloatArray
    x: FloatArray
    pz: FloatArray
    px: FloatArray
    alpha: complex
    t: float
    active: BoolArray

    @property
    def n_particles(self) -> int:
        return int(self.z.size)

    @property
    def shelved_fraction(self) -> float:
        return 1.0 - float(np.mean(self.active))


def initial_state(cfg: EnsembleConfig, rng: np.random.Generator) -> EnsembleState:
    """
    Positions uniform over `init_span` wavelengths, Maxwell-Boltzmann momenta,
    empty cavity. With `pump_axis_init=antinode` every x sits on cos(kx) = 1.
    """
    n = cfg.n_particles
    span = cfg.init_span * cfg.wavelength
    z = rng.uniform(0.0, span, n)
    if cfg.pump_axis_init == PumpAxisInit.ANTINODE:
        x = rng.integers(0, cfg.init_span, n).astype(float) * cfg.wavelength
    else:
        x = rng.uniform(0.0, span, n)
    sigma_p = math.sqrt(cfg.mass * K_B * cfg.temperature)
    pz = rng.normal(0.0, sigma_p, n) if sigma_p > 0 else np.zeros(n)
    px = rng.normal(0.0, sigma_p, n) if sigma_p > 0 else np.zeros(n)
    return EnsembleState(
        z=z, x=x, pz=pz, px=px, alpha=0j, t=0.0, active=np.ones(n, dtype=bool)
    )


def field_derivative(state: EnsembleState, cfg: EnsembleConfig) -> complex:
    """Deterministic part of d(alpha)/dt, including the optional seeding drive."""
    u0, gamma0, eta = u0_gamma0_eta(cfg.g, cfg.delta_pa, cfg.gamma_perp, cfg.omega_p)
    cos_z = np.cos(cfg.k * state.z[state.active])
    cos_x = np.cos(cfg.k * state.x[state.active])
    cos2_sum = float(np.sum(cos_z**2))
    shift_sum = float(np.sum(cos_z)) if cfg.dispersive_sum == DispersiveSum.COS else cos2_sum
    pump_sum = float(np.sum(cos_z * cos_x))
    derivative = (
        1j * (cfg.delta_pc - u0 * shift_sum) * state.alpha
        - (cfg.kappa + gamma0 * cos2_sum) * state.alpha
        - eta * pump_sum
    )
    if cfg.omega_d:
        derivative -= 1j * cfg.omega_d / 2 * np.exp(1j * cfg.seed_phase)
    return complex(derivative)


def interference_strength(alpha: complex, eta: complex) -> float:
    """-i hbar (eta* alpha - eta alpha*) = 2 hbar Im(eta* alpha)."""
    return 2 * HBAR * (eta.conjugate() * alpha).imag


def forces(state: EnsembleState, cfg: EnsembleConfig) -> Tuple[FloatArray, FloatArray]:
    """Deterministic forces along z and x; shelved particles feel none."""
    k = cfg.k
    u0, _, eta = u0_gamma0_eta(cfg.g, cfg.delta_pa, cfg.gamma_perp, cfg.omega_p)
    kz = k * state.z
    kx = k * state.x
    interference = interference_strength(state.alpha, eta)
    # d/dz cos^2(kz) = -k sin(2kz)
    fz = HBAR * u0 * abs(state.alpha) ** 2 * k * np.sin(2 * kz) - interference * k * np.cos(
        kx
    ) * np.sin(kz)
    fx = HBAR * cfg.pump_light_shift * k * np.sin(2 * kx) - interference * k * np.sin(
        kx
    ) * np.cos(kz)
    fz = np.where(state.active, fz, 0.0)
    fx = np.where(state.active, fx, 0.0)
    return fz, fx


def alpha_bound(cfg: EnsembleConfig) -> float:
    """Divergence bound safety * (N |eta| + Omega_d / 2) / kappa, floored by the noise scale."""
    drive = cfg.n_particles * abs(cfg.eta_eff) + cfg.omega_d / 2
    return cfg.alpha_safety * (drive / cfg.kappa + 1.0)


def step(
    state: EnsembleState, cfg: EnsembleConfig, rng: Optional[np.random.Generator] = None
) -> EnsembleState:
    """
    Advance by dt with a symplectic Euler-Maruyama step: momenta first, then
    positions with the new momenta; the field takes an explicit step.

    Raises:
        IntegrationError: on non-finite values or a field beyond `alpha_bound`.
    """
    noisy = cfg.noise_model == NoiseModel.RECOIL_DIFFUSION
    if (noisy or cfg.upsilon is not None) and rng is None:
        raise DomainError("A random generator is needed for noise or Raman loss.")
    dt = cfg.dt
    fz, fx = forces(state, cfg)
    d_alpha = field_derivative(state, cfg) * dt

    pz = state.pz + fz * dt
    px = state.px + fx * dt
    active = state.active
    if noisy:
        assert rng is not None
        n = state.n_particles
        kick = cfg.momentum_noise * math.sqrt(2 * cfg.momentum_diffusion * dt)
        pz = pz + np.where(active, kick * rng.standard_normal(n), 0.0)
        px = px + np.where(active, kick * rng.standard_normal(n), 0.0)
        field_kick = cfg.field_noise * math.sqrt(cfg.kappa * dt / 2)
        d_alpha += field_kick * complex(rng.standard_normal(), rng.standard_normal())

    z = state.z + pz / cfg.mass * dt
    x = state.x + px / cfg.mass * dt
    alpha = state.alpha + d_alpha

    if cfg.upsilon is not None:
        assert rng is not None
        p_raman = cfg.gamma_a / (1 + cfg.upsilon) * dt
        active = active & (rng.random(state.n_particles) >= p_raman)

    t = state.t + dt
    bound = alpha_bound(cfg)
    finite = (
        np.isfinite(alpha)
        and np.all(np.isfinite(z))
        and np.all(np.isfinite(x))
        and np.all(np.isfinite(pz))
        and np.all(np.isfinite(px))
    )
    if not finite or abs(alpha) > bound:
        raise IntegrationError(
            f"Integration diverged at t={t:.4e} s (|alpha|={abs(alpha):.4g}, bound {bound:.4g}).",
            diagnostic={"t": t, "alpha_abs": abs(alpha), "bound": bound, "finite": bool(finite)},
        )
    return replace(state, z=z, x=x, pz=pz, px=px, alpha=alpha, t=t, active=active)


def order_parameter(state: EnsembleState, k: float) -> float:
    """<cos(kz)> over all particles; +1 for even antinodes, -1 for odd."""
    return float(np.mean(np.cos(k * state.z)))


def mean_kinetic_energy(state: EnsembleState, mass: float) -> float:
    return float(np.mean(state.pz**2 + state.px**2) / (2 * mass))


def field_fixed_point(state: EnsembleState, cfg: EnsembleConfig) -> complex:
    """Stationary field for frozen particles, from d(alpha)/dt = 0."""
    frozen = replace(state, alpha=0j)
    source = field_derivative(frozen, cfg)
    rate = field_derivative(replace(state, alpha=1 + 0j), cfg) - source
    return complex(-source / rate)


@dataclass(frozen=True)
class PotentialDepths:
    """V(z) = u2 cos^2(kz) + u1 cos(kz) in J, and the per-particle rate i0 (1/s)."""

    u1: float
    u2: float
    i0: float


def potential_depths(
    cfg: EnsembleConfig,
    order_param: float,
    cos2_mean: Optional[float] = None,
    alpha: Optional[complex] = None,
) -> PotentialDepths:
    """
    Depths of the optical potential along a pump antinode line.

    Without `alpha` the field is taken self-consistently from the order
    parameter. `cos2_mean` defaults to max(<cos kz>^2, 1/2). The detuning in u1
    is the one entering the field equation, Delta_pc - N U0 <cos^2 kz>, so the
    z force is the gradient of V.
    """
    n = cfg.n_particles
    u0, gamma0, eta = u0_gamma0_eta(cfg.g, cfg.delta_pa, cfg.gamma_perp, cfg.omega_p)
    c2 = max(order_param**2, 0.5) if cos2_mean is None else cos2_mean
    detuning = cfg.delta_pc - n * u0 * c2
    loss = cfg.kappa + n * gamma0 * c2
    i0 = abs(eta) ** 2 / (loss**2 + detuning**2)
    if alpha is not None:
        return PotentialDepths(
            u1=-interference_strength(alpha, eta), u2=HBAR * u0 * abs(alpha) ** 2, i0=i0
        )
    return PotentialDepths(
        u1=2 * HBAR * i0 * n * order_param * detuning,
        u2=HBAR * i0 * u0 * n**2 * order_param**2,
        i0=i0,
    )


@dataclass(frozen=True)
class ThresholdReport:
    """Pump thresholds (rad/s) and minimum particle numbers for unsaturated triggering."""

    omega_th_meanfield: float
    omega_th_numerical: float
    n0_x2: float
    n0_x4: float
    s_at_pump: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "omega_th_meanfield_hz": self.omega_th_meanfield / (2 * math.pi),
            "omega_th_numerical_hz": self.omega_th_numerical / (2 * math.pi),
            "n0_x2": self.n0_x2,
            "n0_x4": self.n0_x4,
            "s_at_pump": self.s_at_pump,
        }


def thresholds(
    cfg: DriveConfig, temperature: float, n_particles: float, s_max: float
) -> ThresholdReport:
    """
    Superradiance thresholds for driving kappa below the lower dressed state.

    cfg.g is the coupling to use; pass g_eff = n_eff * g0 for a confocal cavity.
    """
    if temperature <= 0:
        raise DomainError(f"Temperature must be positive, got {temperature}.")
    if n_particles < 1:
        raise DomainError(f"Need at least one particle, got {n_particles}.")
    if not 0 < s_max < 1:
        raise DomainError(f"Saturation bound must lie in (0, 1), got {s_max}.")
    if cfg.g <= 0:
        raise DomainError("Thresholds need a nonzero coupling.")
    thermal = math.sqrt(K_B * temperature / (HBAR * cfg.kappa))
    scale = thermal * cfg.kappa * abs(cfg.delta_pa) / cfg.g
    minimum_number = thermal * cfg.kappa / (2 * cfg.g * math.sqrt(s_max))
    return ThresholdReport(
        omega_th_meanfield=scale / math.sqrt(n_particles) * math.sqrt(2),
        omega_th_numerical=scale / n_particles**0.25 * math.sqrt(math.pi) / 2,
        n0_x2=minimum_number**2,
        n0_x4=minimum_number**4,
        s_at_pump=cfg.omega_p**2 / (4 * cfg.delta_pa**2),
    )


@dataclass(frozen=True)
class Localization:
    localized: bool
    parity: Optional[Parity]
    mean_order: float


def detect_localization(
    times: Sequence[float], order_params: Sequence[float], kappa: float
) -> Localization:
    """
    Classify an order-parameter trace. Localized when the final fifth of the
    run averages above 0.5 in magnitude and at least 95% of those samples
    share the sign of the mean.

    Raises:
        InsufficientDataError: if the trace spans less than 10 / kappa.
    """
    t = np.asarray(times, dtype=float)
    order = np.asarray(order_params, dtype=float)
    if t.size < 2 or t[-1] - t[0] < MIN_RUN_LIFETIMES / kappa:
        raise InsufficientDataError(
            f"Trace spans {t[-1] - t[0] if t.size else 0.0:.3e} s, need at least "
            f"{MIN_RUN_LIFETIMES / kappa:.3e} s."
        )
    window = order[t >= t[0] + (1 - FINAL_WINDOW) * (t[-1] - t[0])]
    mean = float(np.mean(window))
    stable = float(np.mean(np.sign(window) == np.sign(mean))) >= SIGN_STABILITY
    if abs(mean) > LOCALIZED_ORDER and stable:
        return Localization(True, Parity.EVEN if mean > 0 else Parity.ODD, mean)
    return Localization(False, None, mean)


@dataclass(frozen=True)
class Trajectory:
    """Sampled observables of one run."""

    times: FloatArray
    order_param: FloatArray
    alpha_sq: FloatArray
    mean_ke: FloatArray
    shelved_fraction: FloatArray
    final: EnsembleState
    track_shelving: bool = False

    def mean_output(self, kappa: float) -> float:
        """Time-averaged cavity output 2 kappa |alpha|^2 over the final fifth."""
        span = self.times[-1] - self.times[0]
        window = self.times >= self.times[0] + (1 - FINAL_WINDOW) * span
        return float(2 * kappa * np.mean(self.alpha_sq[window]))

    def rows(self) -> List[Dict[str, float]]:
        rows = []
        for i in range(self.times.size):
            row = {
                "t": float(self.times[i]),
                "order_param": float(self.order_param[i]),
                "alpha_sq": float(self.alpha_sq[i]),
                "mean_ke": float(self.mean_ke[i]),
            }
            if self.track_shelving:
                row["shelved_fraction"] = float(self.shelved_fraction[i])
            rows.append(row)
        return rows


def run_trajectory(
    cfg: EnsembleConfig,
    rng: Optional[np.random.Generator] = None,
    state: Optional[EnsembleState] = None,
) -> Trajectory:
    """Integrate one run, sampling every `sample_every` steps and at the end."""
    rng = np.random.default_rng(cfg.seed) if rng is None else rng
    state = initial_state(cfg, rng) if state is None else state
    samples: List[Tuple[float, float, float, float, float]] = []

    def record(current: EnsembleState) -> None:
        samples.append(
            (
                current.t,
                order_parameter(current, cfg.k),
                abs(current.alpha) ** 2,
                mean_kinetic_energy(current, cfg.mass),
                current.shelved_fraction,
            )
        )

    record(state)
    n_steps = cfg.n_steps
    for index in range(1, n_steps + 1):
        state = step(state, cfg, rng)
        if index % cfg.sample_every == 0 or index == n_steps:
            record(state)
    data = np.asarray(samples, dtype=float)
    return Trajectory(
        times=data[:, 0],
        order_param=data[:, 1],
        alpha_sq=data[:, 2],
        mean_ke=data[:, 3],
        shelved_fraction=data[:, 4],
        final=state,
        track_shelving=cfg.upsilon is not None,
    )


@dataclass(frozen=True)
class TrajectorySummary:
    """Per-seed outcome of an ensemble run."""

    seed: int
    localized: bool
    parity: Optional[Parity]
    final_order: float
    mean_output: float
    initial_ke: float
    peak_ke: float
    final_ke: float


def summarize(cfg: EnsembleConfig) -> TrajectorySummary:
    """Run the trajectory for `cfg.seed` and classify it."""
    trajectory = run_trajectory(cfg)
    localization = detect_localization(trajectory.times, trajectory.order_param, cfg.kappa)
    span = trajectory.times[-1] - trajectory.times[0]
    final_window = trajectory.times >= trajectory.times[0] + (1 - FINAL_WINDOW) * span
    return TrajectorySummary(
        seed=cfg.seed,
        localized=localization.localized,
        parity=localization.parity,
        final_order=float(trajectory.order_param[-1]),
        mean_output=trajectory.mean_output(cfg.kappa),
        initial_ke=float(trajectory.mean_ke[0]),
        peak_ke=float(np.max(trajectory.mean_ke)),
        final_ke=float(np.mean(trajectory.mean_ke[final_window])),
    )


def resolve_workers(workers: Optional[int] = None) -> int:
    """Explicit count, else CAVITYCOOL_WORKERS, else the CPU count."""
    if workers is None:
        env = os.environ.get(const.WORKERS_ENVVAR)
        if env:
            try:
                workers = int(env)
            except ValueError:
                raise DomainError(f"{const.WORKERS_ENVVAR} must be an integer, got '{env}'.")
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise DomainError(f"Worker count must be at least 1, got {workers}.")
    return workers


def _run_summaries(configs: List[EnsembleConfig], workers: Optional[int]) -> List[TrajectorySummary]:
    n_workers = min(resolve_workers(workers), len(configs))
    if n_workers <= 1:
        return [summarize(cfg) for cfg in configs]
    logger.debug(f"Running {len(configs)} trajectories on {n_workers} workers")
    with mp.Pool(processes=n_workers) as pool:
        return pool.map(summarize, configs)


def run_ensemble(
    cfg: EnsembleConfig, seeds: Sequence[int], workers: Optional[int] = None
) -> List[TrajectorySummary]:
    """Independent runs, one per seed, returned in seed order."""
    ordered = sorted(seeds)
    return _run_summaries([cfg.with_(seed=seed) for seed in ordered], workers)


@dataclass(frozen=True)
class ScanRow:
    omega_p: float
    p_localize: float
    mean_output: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "omega_p_hz": self.omega_p / (2 * math.pi),
            "p_localize": self.p_localize,
            "mean_output": self.mean_output,
        }


def threshold_scan(
    cfg: EnsembleConfig,
    omega_p_grid: Sequence[float],
    seeds: Sequence[int],
    workers: Optional[int] = None,
) -> List[ScanRow]:
    """Localization probability and mean cavity output per pump strength."""
    if not len(omega_p_grid) or not len(seeds):
        raise DomainError("Threshold scan needs pump values and seeds.")
    ordered = sorted(seeds)
    configs = [
        cfg.with_(omega_p=float(omega_p), seed=seed)
        for omega_p in omega_p_grid
        for seed in ordered
    ]
    summaries = _run_summaries(configs, workers)
    rows = []
    for index, omega_p in enumerate(omega_p_grid):
        chunk = summaries[index * len(ordered) : (index + 1) * len(ordered)]
        rows.append(
            ScanRow(
                omega_p=float(omega_p),
                p_localize=float(np.mean([summary.localized for summary in chunk])),
                mean_output=float(np.mean([summary.mean_output for summary in chunk])),
            )
        )
    return rows


def measured_threshold(rows: Sequence[ScanRow]) -> Optional[float]:
    """Pump strength where the localization probability first crosses 1/2."""
    ordered = sorted(rows, key=lambda row: row.omega_p)
    for low, high in zip(ordered, ordered[1:]):
        if low.p_localize < 0.5 <= high.p_localize:
            fraction = (0.5 - low.p_localize) / (high.p_localize - low.p_localize)
            return low.omega_p + fraction * (high.omega_p - low.omega_p)
    if ordered and ordered[0].p_localize >= 0.5:
        return ordered[0].omega_p
    return None


def output_scaling_slope(ns: Sequence[float], outputs: Sequence[float]) -> float:
    """Least-squares slope of log(output) against log(N)."""
    n_values = np.asarray(ns, dtype=float)
    out_values = np.asarray(outputs, dtype=float)
    if n_values.size < 2 or n_values.size != out_values.size:
        raise DomainError("Slope needs at least two matching (N, output) pairs.")
    if np.any(n_values <= 0) or np.any(out_values <= 0):
        raise DomainError("Slope needs positive particle numbers and outputs.")
    slope, _ = np.polyfit(np.log(n_values), np.log(out_values), 1)
    return float(slope)
