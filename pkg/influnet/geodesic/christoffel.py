# -*- coding: utf-8 -*-
"""
Geodesic-form equations and their Christoffel-symbol analogues.

Sign convention: d²xᵃ/dτ² + Γᵃ_bc ẋᵇẋᶜ = 0, so each Γ is the negative of the
corresponding coefficient of the expanded right-hand side:

    Γ⁰₀₀ = -∂R̃/∂t   Γ⁰₀₁ = -(∂R̃/∂x + ∂R/∂t)/2   Γ⁰₁₁ = -∂R/∂x
    Γ¹₀₀ = -∂R/∂t   Γ¹₀₁ = -(∂R̃/∂t + ∂R/∂x)/2   Γ¹₁₁ = -∂R̃/∂x
"""

# pylint: disable=C0301 # Line too long

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from loguru import logger

from ..settings import INFLUNETSETTINGS
from .fields import Partials

__all__ = [
    "Christoffels",
    "PotentialDerivatives",
    "christoffels",
    "coordinate_conditions_residual",
    "geodesic_rhs",
    "geodesic_quadratic_form",
]


@dataclass(frozen=True)
class Christoffels:
    """The six independent components, ``g{a}_{bc}`` stands for Γᵃ_bc."""

    g0_00: float
    g0_01: float
    g0_11: float
    g1_00: float
    g1_01: float
    g1_11: float

    def residuals(self) -> Tuple[float, float]:
        return coordinate_conditions_residual(self)

    def as_dict(self) -> dict:
        return {
            "G0_00": self.g0_00,
            "G0_01": self.g0_01,
            "G0_11": self.g0_11,
            "G1_00": self.g1_00,
            "G1_01": self.g1_01,
            "G1_11": self.g1_11,
        }


def christoffels(dRt_dt: float, dRt_dx: float, dR_dt: float, dR_dx: float) -> Christoffels:
    return Christoffels(
        g0_00=-dRt_dt,
        g0_01=-(dRt_dx + dR_dt) / 2.0,
        g0_11=-dR_dx,
        g1_00=-dR_dt,
        g1_01=-(dRt_dt + dR_dx) / 2.0,
        g1_11=-dRt_dx,
    )


def coordinate_conditions_residual(gamma: Christoffels) -> Tuple[float, float]:
    """(ρ₁, ρ₂) = (2Γ⁰₀₁ - (Γ¹₀₀ + Γ¹₁₁), 2Γ¹₀₁ - (Γ⁰₀₀ + Γ⁰₁₁))"""
    return (
        2.0 * gamma.g0_01 - (gamma.g1_00 + gamma.g1_11),
        2.0 * gamma.g1_01 - (gamma.g0_00 + gamma.g0_11),
    )


@dataclass(frozen=True)
class PotentialDerivatives:
    """Partials of R̃ and R at a point plus their total derivatives along a worldline."""

    dRt_dtau: float
    dR_dtau: float
    dRt_dt: float
    dRt_dx: float
    dR_dt: float
    dR_dx: float

    @classmethod
    def from_partials(cls, partials: Partials, t_dot: float, x_dot: float) -> "PotentialDerivatives":
        dRt_dtau, dR_dtau = partials.along(t_dot, x_dot)
        return cls(
            dRt_dtau=dRt_dtau,
            dR_dtau=dR_dtau,
            dRt_dt=partials.dRt_dt,
            dRt_dx=partials.dRt_dx,
            dR_dt=partials.dR_dt,
            dR_dx=partials.dR_dx,
        )

    @property
    def christoffels(self) -> Christoffels:
        return christoffels(self.dRt_dt, self.dRt_dx, self.dR_dt, self.dR_dx)


def geodesic_rhs(
    t_dot: float,
    x_dot: float,
    dRt_dtau: float,
    dR_dtau: float,
    tolerance: Optional[float] = None,
) -> Tuple[float, float]:
    """(d²t/dτ², d²x/dτ²) = (dR̃/dτ·ṫ + dR/dτ·ẋ, dR̃/dτ·ẋ + dR/dτ·ṫ)

    Logs a warning when ṫ² - ẋ² deviates from 1 by more than ``tolerance``
    (default: NORM_TOLERANCE setting), the result is returned regardless.
    An infinite ``tolerance`` disables the check, a non-finite norm is only
    logged at debug level.
    """
    tolerance = INFLUNETSETTINGS.NORM_TOLERANCE if tolerance is None else tolerance
    if not math.isinf(tolerance):
        norm = (t_dot - x_dot) * (t_dot + x_dot)
        if not math.isfinite(norm):
            logger.debug("velocity norm not representable: dt/dtau^2 - dx/dtau^2 = {}", norm)
        elif not math.isclose(norm, 1.0, rel_tol=tolerance, abs_tol=0.0):
            logger.warning("velocity not normalized: dt/dtau^2 - dx/dtau^2 = {}", norm)
    return (
        dRt_dtau * t_dot + dR_dtau * x_dot,
        dRt_dtau * x_dot + dR_dtau * t_dot,
    )


def geodesic_quadratic_form(t_dot: float, x_dot: float, gamma: Christoffels) -> Tuple[float, float]:
    """(d²t/dτ², d²x/dτ²) = -Γᵃ_bc ẋᵇẋᶜ

    Equals :py:func:`geodesic_rhs` with the total derivatives taken along (ṫ, ẋ).
    """
    return (
        -(gamma.g0_00 * t_dot * t_dot + 2.0 * gamma.g0_01 * t_dot * x_dot + gamma.g0_11 * x_dot * x_dot),
        -(gamma.g1_00 * t_dot * t_dot + 2.0 * gamma.g1_01 * t_dot * x_dot + gamma.g1_11 * x_dot * x_dot),
    )
