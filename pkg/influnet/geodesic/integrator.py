# -*- coding: utf-8 -*-
"""
Fixed-step 4th order Runge-Kutta integration of the geodesic-form equations.

The state is (t, x, φ, σ) with (ṫ, ẋ) = e^σ(cosh φ, sinh φ). The first-equality
forms d²t/dτ² = Aṫ + Bẋ and d²x/dτ² = Aẋ + Bṫ with A = dR̃/dτ and B = dR/dτ
become φ' = B and σ' = A. The unit hyperboloid is σ = 0, renormalization resets σ.
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=R0913 # Too many arguments
# pylint: disable=R0914 # Too many local variables

import math
from typing import Tuple, Union

import numpy as np
from loguru import logger

from ..exceptions import DomainError
from ..settings import INFLUNETSETTINGS
from ..trajectory import Trajectory, TrajectoryPoint
from ..types import Truncation

__all__ = ["geodesic_derivative", "rk4_step", "integrate"]


def _velocity(phi: float, sigma: float) -> Tuple[float, float]:
    scale = math.exp(sigma)
    return scale * math.cosh(phi), scale * math.sinh(phi)


def geodesic_derivative(field, state: np.ndarray, truncation: Truncation = Truncation.full) -> np.ndarray:
    """d/dτ of (t, x, φ, σ) in the field."""
    t, x, phi, sigma = state
    t_dot, x_dot = _velocity(phi, sigma)
    dRt_dtau, dR_dtau = field.coefficients(t, x, t_dot, x_dot, truncation)
    return np.array([t_dot, x_dot, dR_dtau, dRt_dtau])


def rk4_step(field, state: np.ndarray, step: float, truncation: Truncation = Truncation.full) -> np.ndarray:
    k1 = geodesic_derivative(field, state, truncation)
    k2 = geodesic_derivative(field, state + 0.5 * step * k1, truncation)
    k3 = geodesic_derivative(field, state + 0.5 * step * k2, truncation)
    k4 = geodesic_derivative(field, state + step * k3, truncation)
    return state + step * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0


def _point(tau: float, state: np.ndarray) -> TrajectoryPoint:
    t, x, phi, _ = state
    return TrajectoryPoint(
        tau=float(tau),
        t=float(t),
        x=float(x),
        v=math.tanh(phi),
        k=math.exp(phi),
    )


def integrate(
    field,
    initial: Tuple[float, float, float],
    tau_span: Union[float, Tuple[float, float]],
    step: float,
    truncation: Truncation = Truncation.full,
    renormalize: bool = True,
) -> Trajectory:
    """Integrates a worldline through ``field`` from ``initial`` = (t₀, x₀, φ₀).

    :param field: RateField or PotentialField
    :param tau_span: end τ (starting at 0) or (τ₀, τ₁)
    :param step: fixed step, the last step is shortened to end on τ₁
    :param truncation: coefficient order for rate fields
    :param renormalize: project the velocity onto the unit hyperboloid after every step

    A domain violation of the field (or a non-finite state) stops the integration,
    the samples so far are returned as a truncated trajectory with a diagnostic.
    """
    if not step > 0.0:
        raise DomainError(f"integration step must be > 0, got {step}")
    tau0, tau1 = (0.0, float(tau_span)) if np.isscalar(tau_span) else map(float, tau_span)
    if tau1 < tau0:
        raise DomainError(f"tau span must be ascending, got ({tau0}, {tau1})")
    truncation = Truncation(truncation)

    t0, x0, phi0 = (float(value) for value in initial)
    state = np.array([t0, x0, phi0, 0.0])
    points = [_point(tau0, state)]
    diagnostics = []
    max_drift = 0.0

    full_steps = int(math.floor((tau1 - tau0) / step + 1e-9))
    steps = [step] * full_steps
    remainder = (tau1 - tau0) - full_steps * step
    if remainder > 1e-12 * max(1.0, abs(tau1)):
        steps.append(remainder)

    tau = tau0
    for index, current in enumerate(steps):
        next_tau = tau1 if index + 1 == len(steps) else tau0 + (index + 1) * step
        try:
            candidate = rk4_step(field, state, current, truncation)
            if not np.all(np.isfinite(candidate)):
                raise DomainError(f"non-finite state {candidate.tolist()}")
            drift = abs(math.expm1(2.0 * candidate[3]))
            if renormalize:
                candidate[3] = 0.0
            point = _point(next_tau, candidate)
        except (ValueError, OverflowError) as exc:
            message = f"integration stopped at tau={tau:.17g} after {index} of {len(steps)} steps: {exc}"
            logger.warning(message)
            diagnostics.append(message)
            return Trajectory(points, source="continuum", truncated=True, diagnostics=diagnostics)

        max_drift = max(max_drift, drift)
        state = candidate
        tau = next_tau
        points.append(point)

    if max_drift > INFLUNETSETTINGS.NORM_TOLERANCE:
        message = f"max norm drift |dt/dtau^2 - dx/dtau^2 - 1| = {max_drift:.3e}{' (renormalized)' if renormalize else ''}"
        logger.debug(message)
        diagnostics.append(message)
    logger.debug("integrated {} steps with {} truncation", len(steps), truncation.value)
    return Trajectory(points, source="continuum", diagnostics=diagnostics)
