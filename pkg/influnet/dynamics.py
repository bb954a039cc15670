# -*- coding: utf-8 -*-
"""
Influence dynamics: k-updates on reception and the seeded discrete-event
simulation of an influenced particle.

A reception after N emissions localizes the particle. Observers quantify the
interval with effective counts N_p = N_q = (N+1)/2 and the updated k, where
k' = k(N+1)/N for a reception from the Q side and k' = kN/(N+1) from the P side.
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=R0913 # Too many arguments

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np
from loguru import logger

from .exceptions import DegenerateIntervalError, DomainError, RateDomainError
from .quantify import interval_from_counts, rapidity, to_spacetime, velocity_from_k
from .settings import INFLUNETSETTINGS
from .trajectory import Trajectory, TrajectoryPoint
from .types import Arithmetic, GapMode, Side
from .utils import Number, is_exact, to_number

__all__ = [
    "RateSpec",
    "ParticleState",
    "ReceptionEvent",
    "consistency_holds",
    "k1_projection",
    "post_reception_velocity",
    "apply_reception",
    "receive_q",
    "receive_p",
    "expected_k_factors",
    "sample_gap",
    "Simulator",
    "simulate",
]

MAX_TOTAL_RATE = Fraction(1, 2)


@dataclass(frozen=True)
class RateSpec:
    """Per-emission reception rates from the P and Q side.

    ``total`` is r̃ = r_p + r_q, ``net`` is r = r_q - r_p.
    Raises RateDomainError unless r_p, r_q >= 0 and 0 < r̃ <= 1/2.
    """

    r_p: Number
    r_q: Number

    def __post_init__(self):
        if self.r_p < 0 or self.r_q < 0:
            raise RateDomainError(f"reception rates must be >= 0, got r_p={self.r_p} r_q={self.r_q}")
        if not 0 < self.total <= MAX_TOTAL_RATE:
            raise RateDomainError(
                f"total reception rate must be in (0, 1/2], got {self.total} (r_p={self.r_p}, r_q={self.r_q})"
            )

    @property
    def total(self) -> Number:
        return self.r_p + self.r_q

    @property
    def net(self) -> Number:
        return self.r_q - self.r_p

    @property
    def probability_q(self) -> Number:
        """Pr(reception from Q side) = r_q/r̃"""
        return self.r_q / self.total

    @property
    def mean_gap(self) -> Number:
        """N' = 1/r̃"""
        return Fraction(1) / self.total if is_exact(self.total) else 1.0 / self.total

    def rates_at(self, t: float, x: float) -> "RateSpec":  # pylint: disable=W0613
        """Constant rates, the same at every (t, x)."""
        return self


@dataclass(frozen=True)
class ParticleState:
    """State of the influenced particle.

    ``n`` counts emission events since the particle was last localized.
    """

    k: Number = 1
    n: int = 0
    tau: Number = 0
    t: Number = 0
    x: Number = 0

    def __post_init__(self):
        if isinstance(self.k, bool) or not self.k > 0:
            raise DomainError(f"k must be > 0, got {self.k}")
        if self.n < 0:
            raise DomainError(f"emission count must be >= 0, got {self.n}")

    @property
    def rapidity(self) -> float:
        return rapidity(self.k)

    @property
    def velocity(self) -> Number:
        return velocity_from_k(self.k)

    def emit(self, count: int = 1) -> "ParticleState":
        """State after ``count`` further emission events."""
        return replace(self, n=self.n + count)


@dataclass(frozen=True)
class ReceptionEvent:
    """A reception and the effective interval it closes.

    ``gap`` is N' = N + 1, the interval length in events including the reception.
    """

    side: Side
    gap: int
    k_before: Number
    k_after: Number
    n_effective: Number
    dp: Number
    dq: Number
    dtau: Number
    dt: Number
    dx: Number
    last_emission_side: Optional[Side] = None


def _check_count(n: int) -> None:
    if n < 1:
        raise DegenerateIntervalError(f"interval without emission events (N={n})")


def consistency_holds(dp: Number, dq: Number, n: Number) -> bool:
    """dp·dq = (N/2)², exact for rationals and to 1e-12 relative for floats.

    >>> consistency_holds(4, 1, 4)
    True
    >>> consistency_holds(4, 2, 4)
    False
    """
    if is_exact(dp, dq, n):
        return Fraction(dp) * Fraction(dq) == (Fraction(n) / 2) ** 2
    return math.isclose(dp * dq, (n / 2) ** 2, rel_tol=1e-12)


def k1_projection(k: Number, n: int) -> Number:
    """k₁ = (N + 1/2)k/N"""
    _check_count(n)
    if is_exact(k):
        return Fraction(2 * n + 1, 2 * n) * k
    return (n + 0.5) * k / n


def _k_factor(n: int, exact: bool) -> Number:
    """(N+1)/N"""
    return Fraction(n + 1, n) if exact else (n + 1) / n


def post_reception_velocity(k: Number, n: int) -> Number:
    """v' = (((N+1)/N)k - (N/(N+1))/k) / (((N+1)/N)k + (N/(N+1))/k)

    >>> post_reception_velocity(1, 1)
    Fraction(3, 5)
    """
    _check_count(n)
    if isinstance(k, bool) or not k > 0:
        raise DomainError(f"k must be > 0, got {k}")
    exact = is_exact(k)
    factor = _k_factor(n, exact)
    forward = factor * k
    backward = Fraction(1) / forward if exact else 1.0 / forward
    return (forward - backward) / (forward + backward)


def apply_reception(
    state: ParticleState,
    side: Side,
    changes_k: bool = True,
    last_emission_side: Optional[Side] = None,
) -> Tuple[ParticleState, ReceptionEvent]:
    """Applies a reception after ``state.n`` emissions.

    k is multiplied by (N+1)/N (Q side) or N/(N+1) (P side) unless ``changes_k``
    is False. The effective interval is quantified with N_p = N_q = (N+1)/2 and the
    updated k, it advances (τ, t, x). The returned state has N reset to 0.
    """
    n = state.n
    _check_count(n)
    exact = is_exact(state.k)
    factor = _k_factor(n, exact)
    side = Side(side)

    if not changes_k:
        k_after = state.k
    elif side is Side.Q:
        k_after = state.k * factor
    else:
        k_after = state.k / factor

    n_effective = Fraction(n + 1, 2) if exact else (n + 1) / 2
    interval = interval_from_counts(n_effective, n_effective, k_after)
    increment = to_spacetime(interval)

    event = ReceptionEvent(
        side=side,
        gap=n + 1,
        k_before=state.k,
        k_after=k_after,
        n_effective=n_effective,
        dp=interval.dp,
        dq=interval.dq,
        dtau=n_effective,
        dt=increment.dt,
        dx=increment.dx,
        last_emission_side=last_emission_side,
    )
    new_state = ParticleState(
        k=k_after,
        n=0,
        tau=state.tau + n_effective,
        t=state.t + increment.dt,
        x=state.x + increment.dx,
    )
    return new_state, event


def receive_q(state: ParticleState) -> ParticleState:
    """Reception from the Q side: k' = k(N+1)/N"""
    return apply_reception(state, Side.Q)[0]


def receive_p(state: ParticleState) -> ParticleState:
    """Reception from the P side: k' = kN/(N+1)"""
    return apply_reception(state, Side.P)[0]


def expected_k_factors(rates: RateSpec) -> Tuple[float, float]:
    """Mean factors (<k'>/k, <1/k'>·k) over the side probabilities at the mean gap N' = 1/r̃.

    A Q-side reception multiplies k by N'/(N'-1) = 1/(1-r̃), a P-side one by (N'-1)/N' = 1-r̃.
    """
    total = float(rates.total)
    p_q, p_p = float(rates.r_q) / total, float(rates.r_p) / total
    up, down = 1.0 / (1.0 - total), 1.0 - total
    return p_q * up + p_p * down, p_q * down + p_p * up


def sample_gap(
    rates: RateSpec,
    rng: np.random.Generator,
    mode: GapMode = GapMode.deterministic,
) -> Tuple[int, Side]:
    """Draws the inter-reception gap N' and the reception side.

    - ``deterministic``: N' = round(1/r̃), half up
    - ``stochastic``: N' = 2 + Poisson(1/r̃ - 2)
    - ``geometric``: N' = 1 + Geometric(r̃/(1 - r̃))

    All modes have mean 1/r̃ (the deterministic one up to rounding) and N' >= 2.
    The side is Q with probability r_q/r̃, independent of N'.
    """
    mode = GapMode(mode)
    total = rates.total
    if mode is GapMode.deterministic:
        gap = math.floor(1 / Fraction(total) + Fraction(1, 2)) if is_exact(total) else math.floor(1.0 / total + 0.5)
    elif mode is GapMode.stochastic:
        gap = 2 + int(rng.poisson(max(1.0 / float(total) - 2.0, 0.0)))
    else:
        total = float(total)
        gap = 1 + int(rng.geometric(total / (1.0 - total)))
    side = Side.Q if rng.random() < float(rates.probability_q) else Side.P
    return int(gap), side


class Simulator:
    """Seeded discrete-event simulation of an influenced particle.

    :param rates: a RateSpec or any rate field with ``rates_at(t, x) -> RateSpec``
    :param seed: seed of the run-owned numpy Generator
    :param gap_mode: inter-reception gap distribution
    :param arithmetic: ``exact`` keeps k, τ, t, x rational, ``float`` uses floats
    :param no_op_probability: probability that a reception leaves k unchanged
    :param max_resamples: bound on collinearity rejection draws per reception

    Each reception draws the gap, the reception side and the side of the last
    emission before it. Pairs where the last emission went toward the reception
    side are not admissible and are redrawn.
    """

    def __init__(
        self,
        rates,
        seed: Optional[int] = None,
        gap_mode: GapMode = GapMode.deterministic,
        arithmetic: Arithmetic = Arithmetic.exact,
        no_op_probability: float = 0.0,
        max_resamples: Optional[int] = None,
    ):
        if not 0.0 <= no_op_probability < 1.0:
            raise DomainError(f"no_op_probability must be in [0, 1), got {no_op_probability}")
        self.rates = rates
        self.seed = seed
        self.gap_mode = GapMode(gap_mode)
        self.arithmetic = Arithmetic(arithmetic)
        self.no_op_probability = no_op_probability
        self.max_resamples = max_resamples or INFLUNETSETTINGS.MAX_RESAMPLES
        self.rng = np.random.default_rng(seed)

    def _draw_reception(self, rates: RateSpec) -> Tuple[int, Side, Side]:
        gap, side = sample_gap(rates, self.rng, self.gap_mode)
        for _ in range(self.max_resamples):
            last_emission = Side.P if self.rng.random() < 0.5 else Side.Q
            if last_emission is not side:
                return gap, side, last_emission
            side = Side.Q if self.rng.random() < float(rates.probability_q) else Side.P
        raise DomainError(
            f"no collinearity-admissible reception after {self.max_resamples} draws"
        )

    def _initial(self, initial: ParticleState) -> ParticleState:
        exact = self.arithmetic is Arithmetic.exact
        return ParticleState(
            k=to_number(initial.k, exact=exact),
            n=initial.n,
            tau=to_number(initial.tau, exact=exact),
            t=to_number(initial.t, exact=exact),
            x=to_number(initial.x, exact=exact),
        )

    def step(self, state: ParticleState) -> Tuple[ParticleState, ReceptionEvent]:
        """Advances ``state`` by one reception."""
        rates = self.rates.rates_at(float(state.t), float(state.x))
        gap, side, last_emission = self._draw_reception(rates)
        changes_k = True
        if self.no_op_probability > 0.0 and self.rng.random() < self.no_op_probability:
            changes_k = False
            logger.debug("no-op reception at tau={}", state.tau)
        state, event = apply_reception(
            state.emit(gap - 1),
            side,
            changes_k=changes_k,
            last_emission_side=last_emission,
        )
        if self.arithmetic is Arithmetic.floating and not all(
            math.isfinite(value) for value in (state.k, state.t, state.x)
        ):
            raise DomainError(f"floating point overflow at tau={state.tau}")
        return state, event

    def run(
        self, initial: ParticleState, receptions: int, strict: bool = True
    ) -> Trajectory:
        """Runs ``receptions`` receptions from ``initial``.

        One TrajectoryPoint is recorded per reception. With ``strict`` a domain
        violation propagates, otherwise the trajectory up to the violation is
        returned marked as truncated.
        """
        state = self._initial(initial)
        points = []
        try:
            for _ in range(receptions):
                state, event = self.step(state)
                points.append(
                    TrajectoryPoint(
                        tau=state.tau,
                        t=state.t,
                        x=state.x,
                        v=velocity_from_k(state.k),
                        k=state.k,
                        side=event.side,
                        gap=event.gap,
                    )
                )
        except DomainError as exc:
            if strict:
                raise
            message = f"simulation stopped after {len(points)} of {receptions} receptions: {exc}"
            logger.warning(message)
            return Trajectory(points, source="discrete", truncated=True, diagnostics=[message])
        logger.debug("simulated {} receptions (seed={})", receptions, self.seed)
        return Trajectory(points, source="discrete")


def simulate(
    initial: ParticleState,
    rates: Union[RateSpec, object],
    receptions: int,
    seed: Optional[int] = None,
    gap_mode: GapMode = GapMode.deterministic,
    arithmetic: Arithmetic = Arithmetic.exact,
    no_op_probability: float = 0.0,
    strict: bool = True,
) -> Trajectory:
    """Convenience wrapper around :py:class:`Simulator`."""
    return Simulator(
        rates,
        seed=seed,
        gap_mode=gap_mode,
        arithmetic=arithmetic,
        no_op_probability=no_op_probability,
    ).run(initial, receptions, strict=strict)
