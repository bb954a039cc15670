# -*- coding: utf-8 -*-
"""
Mean-value increments of an influenced particle and the rate potential derivatives.

All functions work on floats. With r̃ = r_p + r_q and r = r_q - r_p the mean gap is
1/r̃ and the base proper time quantum is dτ = 1/(2r̃₀).
"""

# pylint: disable=C0301 # Line too long

from typing import Optional, Tuple

from ..dynamics import RateSpec, expected_k_factors
from ..exceptions import DomainError, RateDomainError

__all__ = [
    "mean_increments",
    "expected_increments",
    "base_increments",
    "second_increments",
    "rate_potential_derivatives",
]


def _check_total(total: float, name: str = "r̃") -> None:
    if not 0.0 < total <= 0.5:
        raise RateDomainError(f"{name} must be in (0, 1/2], got {total}")


def _check_k(k: float) -> None:
    if not k > 0.0:
        raise DomainError(f"k must be > 0, got {k}")


def mean_increments(r_p: float, r_q: float, k: float) -> Tuple[float, float]:
    """Closed-form means (dp, dq) over one inter-reception interval.

    dp = (1 - 2r_p + r_p·r̃)·k / (2r̃(1 - r̃)),  dq = (1 - 2r_q + r_q·r̃)/k / (2r̃(1 - r̃))
    """
    RateSpec(r_p, r_q)
    _check_k(k)
    total = r_p + r_q
    scale = 2.0 * total * (1.0 - total)
    return (
        (1.0 - 2.0 * r_p + r_p * total) * k / scale,
        (1.0 - 2.0 * r_q + r_q * total) / k / scale,
    )


def expected_increments(r_p: float, r_q: float, k: float) -> Tuple[float, float]:
    """Means (dp, dq) as the side-averaged effective interval at the mean gap.

    Equal to :py:func:`mean_increments`, written as (N'/2)·<k'> and (N'/2)·<1/k'>.
    """
    rates = RateSpec(r_p, r_q)
    _check_k(k)
    factor_k, factor_inverse = expected_k_factors(rates)
    half_gap = 0.5 / float(rates.total)
    return half_gap * k * factor_k, half_gap / k * factor_inverse


def base_increments(k: float, total0: float) -> Tuple[float, float, float]:
    """(dτ, dt, dx) for dτ = 1/(2r̃₀): dt = (dτ/2)(k + 1/k), dx = (dτ/2)(k - 1/k)"""
    _check_total(total0, "r̃₀")
    _check_k(k)
    dtau = 1.0 / (2.0 * total0)
    return dtau, 0.5 * dtau * (k + 1.0 / k), 0.5 * dtau * (k - 1.0 / k)


def second_increments(
    k: float,
    r_p: float,
    r_q: float,
    total0: Optional[float] = None,
    form: str = "simplified",
) -> Tuple[float, float]:
    """Excess (ddt, ddx) of the mean increments over the base increments.

    ``simplified`` evaluates

        ddt = r̃/(8(1 - r̃))·(k + 1/k) + (r/(4r̃))(1 + r̃/(2(1 - r̃)))·(k - 1/k)

    and ddx with (k + 1/k) and (k - 1/k) swapped, taking r̃₀ ≈ r̃.
    ``full`` subtracts :py:func:`base_increments` at ``total0`` from the mean
    increments at the current rates. Both forms coincide when total0 equals r̃.
    """
    RateSpec(r_p, r_q)
    _check_k(k)
    total = r_p + r_q
    total0 = total if total0 is None else total0
    if form == "full":
        dp, dq = mean_increments(r_p, r_q, k)
        _, dt, dx = base_increments(k, total0)
        return 0.5 * (dp + dq) - dt, 0.5 * (dp - dq) - dx
    if form != "simplified":
        raise ValueError(f"unknown form '{form}', expected 'simplified' or 'full'")
    net = r_q - r_p
    even, odd = k + 1.0 / k, k - 1.0 / k
    drift = total / (8.0 * (1.0 - total))
    push = (net / (4.0 * total)) * (1.0 + total / (2.0 * (1.0 - total)))
    return drift * even + push * odd, drift * odd + push * even


def rate_potential_derivatives(
    total: float, net: float, dtau: Optional[float] = None
) -> Tuple[float, float]:
    """(dR̃/dτ, dR/dτ) = (r̃²/(2(1 - r̃)dτ), (r/dτ)(1 + r̃/(2(1 - r̃))))

    ``dtau`` defaults to 1/(2r̃).
    """
    _check_total(total)
    if abs(net) > total:
        raise RateDomainError(f"|r| must not exceed r̃, got r={net} r̃={total}")
    if dtau is None:
        dtau = 1.0 / (2.0 * total)
    if not dtau > 0.0:
        raise DomainError(f"dτ must be > 0, got {dtau}")
    return (
        total * total / (2.0 * (1.0 - total) * dtau),
        (net / dtau) * (1.0 + total / (2.0 * (1.0 - total))),
    )
