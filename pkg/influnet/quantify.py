# -*- coding: utf-8 -*-
"""
Interval algebra: observer counts and k-values to (dp, dq), proper time,
spacetime increments and velocity.

Chain length is rest-frame time, the atomic interval is 1/2 and k_q = 1/k_p = 1/k.
Functions stay in rational arithmetic when all inputs are ints or Fractions and
fall back to floats otherwise.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exceptions import DomainError
from .utils import Number, exact_sqrt, is_exact

__all__ = [
    "ATOMIC_INTERVAL",
    "Interval",
    "SpacetimeIncrement",
    "interval_from_counts",
    "proper_time",
    "to_spacetime",
    "velocity_from_k",
    "k_from_velocity",
    "rapidity",
    "k_from_rapidity",
]

ATOMIC_INTERVAL = Fraction(1, 2)


def _check_k(k: Number) -> None:
    if isinstance(k, bool) or not k > 0:
        raise DomainError(f"k must be > 0, got {k}")


@dataclass(frozen=True)
class Interval:
    """Particle interval as quantified by the P and Q observers.

    ``n_p``, ``n_q`` and ``k`` are set when the interval was built from counts.
    """

    dp: Number
    dq: Number
    n_p: Optional[Number] = None
    n_q: Optional[Number] = None
    k: Optional[Number] = None

    def __post_init__(self):
        if self.dp < 0 or self.dq < 0:
            raise DomainError(f"interval lengths must be >= 0, got dp={self.dp} dq={self.dq}")
        if self.k is not None:
            _check_k(self.k)


@dataclass(frozen=True)
class SpacetimeIncrement:
    """Coordinate time, position and proper time of an interval."""

    dt: Number
    dx: Number
    dtau: Number
    dtau_squared: Number

    def interval_squared(self) -> Number:
        """dt² - dx² in the factorized form (dt - dx)(dt + dx) = dq·dp."""
        return (self.dt - self.dx) * (self.dt + self.dx)


def interval_from_counts(n_p: Number, n_q: Number, k: Number) -> Interval:
    """dp = N_p·k and dq = N_q/k.

    >>> interval_from_counts(2, 2, 2)
    Interval(dp=4, dq=Fraction(1, 1), n_p=2, n_q=2, k=2)
    """
    _check_k(k)
    if n_p < 0 or n_q < 0:
        raise DomainError(f"counts must be >= 0, got N_p={n_p} N_q={n_q}")
    k_q = Fraction(1) / k if is_exact(k) else 1.0 / k
    return Interval(dp=n_p * k, dq=n_q * k_q, n_p=n_p, n_q=n_q, k=k)


def proper_time(interval: Interval) -> Number:
    """dτ² = dp·dq, equal to N_p·N_q for intervals built from counts."""
    return interval.dp * interval.dq


def to_spacetime(interval: Interval) -> SpacetimeIncrement:
    """Symmetric and antisymmetric decomposition of (dp, dq)."""
    dp, dq = interval.dp, interval.dq
    half = ATOMIC_INTERVAL if is_exact(dp, dq) else 0.5
    dtau_squared = dp * dq
    return SpacetimeIncrement(
        dt=(dp + dq) * half,
        dx=(dp - dq) * half,
        dtau=exact_sqrt(dtau_squared),
        dtau_squared=dtau_squared,
    )


def velocity_from_k(k: Number) -> Number:
    """v = (k - 1/k)/(k + 1/k), exact for rational k.

    >>> velocity_from_k(Fraction(2))
    Fraction(3, 5)
    """
    _check_k(k)
    if is_exact(k):
        k = Fraction(k)
        return (k * k - 1) / (k * k + 1)
    # tanh(ln k) keeps |v| < 1 where k² would overflow
    return math.tanh(math.log(k))


def k_from_velocity(v: Number) -> Number:
    """k = sqrt((1 + v)/(1 - v)), exact when the rational radicand is a perfect square.

    >>> k_from_velocity(Fraction(4, 5))
    Fraction(3, 1)
    """
    if isinstance(v, bool) or not -1 < v < 1:
        raise DomainError(f"|v| must be < 1, got {v}")
    if is_exact(v):
        v = Fraction(v)
        return exact_sqrt((1 + v) / (1 - v))
    return math.sqrt((1.0 + v) / (1.0 - v))


def rapidity(k: Number) -> float:
    """φ = ln k, which equals atanh(v) but stays finite when v rounds to ±1."""
    _check_k(k)
    return math.log(k)


def k_from_rapidity(phi: float) -> float:
    return math.exp(phi)
