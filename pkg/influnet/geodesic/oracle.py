# -*- coding: utf-8 -*-
"""
Analytic checks: constant-acceleration (hyperbolic) motion, the proper-time
maximum over the split of an interval, and geodesic residuals of sampled
trajectories.
"""

# pylint: disable=C0301 # Line too long

import math
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from ..dynamics import RateSpec
from ..exceptions import DomainError
from ..trajectory import Trajectory, TrajectoryPoint
from ..types import Truncation
from .christoffel import geodesic_rhs

__all__ = [
    "HyperbolicParams",
    "HyperbolicMotion",
    "hyperbolic_solution",
    "ExtremumCheck",
    "proper_time_extremum_check",
    "GeodesicResiduals",
    "geodesic_residuals",
    "oracle_deviation",
    "point_distances",
    "scaled_rms",
]


@dataclass(frozen=True)
class HyperbolicParams:
    """t = C₁ sinh(aτ + φ₀) + C₂,  x = C₁ cosh(aτ + φ₀) + C₃"""

    a: float
    phi0: float
    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        if not self.a > 0.0:
            raise DomainError(f"proper acceleration must be > 0, got {self.a}")

    @classmethod
    def anchored(cls, a: float, t0: float = 0.0, x0: float = 0.0, phi0: float = 0.0) -> "HyperbolicParams":
        """Unit-normalized worldline (C₁ = 1/a) through (t₀, x₀) at τ = 0 with rapidity φ₀."""
        if not a > 0.0:
            raise DomainError(f"proper acceleration must be > 0, got {a}")
        c1 = 1.0 / a
        return cls(a=a, phi0=phi0, c1=c1, c2=t0 - c1 * math.sinh(phi0), c3=x0 - c1 * math.cosh(phi0))

    @classmethod
    def from_rates(cls, rates: RateSpec, t0: float = 0.0, x0: float = 0.0, phi0: float = 0.0) -> "HyperbolicParams":
        """a = 2r̃r, which is 2r_q² for one-sided rates."""
        return cls.anchored(2.0 * float(rates.total) * float(rates.net), t0=t0, x0=x0, phi0=phi0)


class HyperbolicMotion:
    """Callable τ -> (t, x) of a hyperbolic worldline."""

    def __init__(self, params: HyperbolicParams):
        self.params = params

    def __call__(self, tau: float) -> Tuple[float, float]:
        p = self.params
        angle = p.a * tau + p.phi0
        return p.c1 * math.sinh(angle) + p.c2, p.c1 * math.cosh(angle) + p.c3

    def rapidity(self, tau: float) -> float:
        return self.params.a * tau + self.params.phi0

    def proper_velocity(self, tau: float) -> Tuple[float, float]:
        """(dt/dτ, dx/dτ), norm C₁²a²"""
        p = self.params
        angle = p.a * tau + p.phi0
        return p.c1 * p.a * math.cosh(angle), p.c1 * p.a * math.sinh(angle)

    def sample(self, taus: Iterable[float]) -> Trajectory:
        points = []
        for tau in taus:
            t, x = self(tau)
            phi = self.rapidity(tau)
            points.append(TrajectoryPoint(tau=float(tau), t=t, x=x, v=math.tanh(phi), k=math.exp(phi)))
        return Trajectory(points, source="analytic")


def hyperbolic_solution(params: HyperbolicParams) -> HyperbolicMotion:
    return HyperbolicMotion(params)


def point_distances(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Euclidean (t, x) distances row by row, finite for coordinates near the float range."""
    difference = np.asarray(first, dtype=float) - np.asarray(second, dtype=float)
    return np.hypot(difference[:, 0], difference[:, 1])


def scaled_rms(values: np.ndarray) -> float:
    """Root mean square, computed on values scaled by their largest magnitude."""
    values = np.abs(np.asarray(values, dtype=float))
    if not values.size:
        return 0.0
    largest = float(np.max(values))
    if not largest > 0.0 or not math.isfinite(largest):
        return largest
    return largest * float(np.sqrt(np.mean((values / largest) ** 2)))


def oracle_deviation(trajectory: Trajectory, motion: HyperbolicMotion) -> Tuple[float, float]:
    """Pointwise deviation of a trajectory from the oracle at the sample τ.

    Returns (max |Δ(t, x)|, that maximum divided by the largest oracle distance
    from its starting point).
    """
    if not len(trajectory):
        raise DomainError("oracle deviation of an empty trajectory")
    taus = trajectory.taus
    expected = np.array([motion(tau) for tau in taus])
    errors = point_distances(trajectory.positions, expected)
    scale = float(np.max(point_distances(expected, expected[:1])))
    max_error = float(np.max(errors))
    return max_error, max_error / scale if scale > 0.0 else max_error


@dataclass(frozen=True)
class ExtremumCheck:
    """Argmax of N_p(N' - N_p) over N_p ∈ {0..N'}."""

    gap: int
    argmax: Tuple[int, ...]
    value: int
    second_difference: int

    @property
    def at_half(self) -> bool:
        return self.argmax == tuple(sorted({self.gap // 2, (self.gap + 1) // 2}))


def proper_time_extremum_check(gap: int) -> ExtremumCheck:
    """Brute force over the splits of an interval of N' events into N_p and N' - N_p."""
    if gap < 2:
        raise DomainError(f"gap must be >= 2, got {gap}")
    values = [n_p * (gap - n_p) for n_p in range(gap + 1)]
    value = max(values)
    argmax = tuple(n_p for n_p, current in enumerate(values) if current == value)
    center = argmax[0]
    second_difference = values[center - 1] - 2 * values[center] + values[center + 1]
    return ExtremumCheck(gap=gap, argmax=argmax, value=value, second_difference=second_difference)


@dataclass(frozen=True)
class GeodesicResiduals:
    """Finite-difference second derivatives of a trajectory against the geodesic right-hand side."""

    samples: int
    max_abs_t: float
    max_abs_x: float
    rms_t: float
    rms_x: float
    max_relative: float

    def as_dict(self) -> dict:
        return {
            "samples": self.samples,
            "max_abs_t": self.max_abs_t,
            "max_abs_x": self.max_abs_x,
            "rms_t": self.rms_t,
            "rms_x": self.rms_x,
            "max_relative": self.max_relative,
        }


def _derivatives(taus: np.ndarray, values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Three-point first and second derivatives at interior samples, non-uniform spacing."""
    h1 = taus[1:-1] - taus[:-2]
    h2 = taus[2:] - taus[1:-1]
    lower, center, upper = values[:-2], values[1:-1], values[2:]
    first = (
        -h2 / (h1 * (h1 + h2)) * lower
        + (h2 - h1) / (h1 * h2) * center
        + h1 / (h2 * (h1 + h2)) * upper
    )
    second = 2.0 * (lower / (h1 * (h1 + h2)) - center / (h1 * h2) + upper / (h2 * (h1 + h2)))
    return first, second


def geodesic_residuals(
    trajectory: Trajectory, field, truncation: Truncation = Truncation.full
) -> GeodesicResiduals:
    """Checks a sampled trajectory (discrete or continuum) against the geodesic-form equations.

    Velocities and accelerations are three-point finite differences over τ, the
    right-hand side is evaluated from the field at each interior sample.
    """
    if len(trajectory) < 3:
        raise DomainError(f"geodesic residuals need at least 3 samples, got {len(trajectory)}")
    taus = trajectory.taus
    if np.any(np.diff(taus) <= 0.0):
        raise DomainError("geodesic residuals need strictly ascending tau")
    positions = trajectory.positions
    t_dot, t_ddot = _derivatives(taus, positions[:, 0])
    x_dot, x_ddot = _derivatives(taus, positions[:, 1])

    residual_t = np.empty_like(t_dot)
    residual_x = np.empty_like(x_dot)
    for index, (t, x) in enumerate(positions[1:-1]):
        dRt_dtau, dR_dtau = field.coefficients(t, x, t_dot[index], x_dot[index], truncation)
        expected_t, expected_x = geodesic_rhs(t_dot[index], x_dot[index], dRt_dtau, dR_dtau, tolerance=math.inf)
        residual_t[index] = t_ddot[index] - expected_t
        residual_x[index] = x_ddot[index] - expected_x

    scale = float(np.max(np.abs(np.concatenate([t_ddot, x_ddot]))))
    max_abs = float(np.max(np.abs(np.concatenate([residual_t, residual_x]))))
    return GeodesicResiduals(
        samples=len(t_dot),
        max_abs_t=float(np.max(np.abs(residual_t))),
        max_abs_x=float(np.max(np.abs(residual_x))),
        rms_t=scaled_rms(residual_t),
        rms_x=scaled_rms(residual_x),
        max_relative=max_abs / scale if scale > 0.0 else max_abs,
    )
