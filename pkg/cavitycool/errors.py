# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Exceptions raised by the cavitycool library."""

from typing import Any, Dict, Optional


class CavityCoolError(Exception):
    """Base error for cavitycool."""


class DomainError(CavityCoolError, ValueError):
    """A physical input is outside the domain of a formula."""


class NumericalError(CavityCoolError):
    """A numerical procedure failed."""


class ConvergenceError(NumericalError):
    """An iterative solver did not reach its tolerance."""

    def __init__(self, message: str, residual: float, iterations: int) -> None:
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class SingularityError(NumericalError):
    """A denominator vanished, e.g. on a dressed-state resonance."""


class IntegrationError(NumericalError):
    """The stochastic integrator diverged."""

    def __init__(self, message: str, diagnostic: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class CutoffError(NumericalError):
    """Population leaked into the top Fock level of a truncated space."""

    def __init__(self, top_population: float, fock_cutoff: int) -> None:
        super().__init__(
            f"Top Fock level holds population {top_population:.3e} at cutoff "
            f"{fock_cutoff}; increase fock_cutoff."
        )
        self.top_population = top_population
        self.fock_cutoff = fock_cutoff


class InsufficientDataError(CavityCoolError):
    """Not enough samples to classify a trajectory."""
