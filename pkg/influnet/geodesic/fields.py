# -*- coding: utf-8 -*-
"""
Rate fields and rate potentials on 1+1 spacetime.

Both kinds of field provide ``coefficients(t, x, t_dot, x_dot, truncation)``
returning (dR̃/dτ, dR/dτ) at a point of a worldline, which is all the geodesic
right-hand side needs. Named fields are registered with :py:class:`FieldRegistry`.
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=R0913 # Too many arguments

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from ..dynamics import RateSpec
from ..settings import INFLUNETSETTINGS
from ..types import Truncation
from .increments import rate_potential_derivatives

__all__ = [
    "FieldRegistry",
    "Partials",
    "RateField",
    "PotentialField",
    "finite_difference_partials",
]

ScalarField = Callable[[float, float], float]


class FieldRegistry:
    """
    FieldRegistry provides decorator methods to register rate field and
    potential factories, which are available as class attributes (dict).
    """

    rate_fields: dict = {}
    potentials: dict = {}

    @classmethod
    def registerratefield(cls, function):
        """Decorator to register a rate field factory"""
        cls.rate_fields[function.__name__] = function
        return function

    @classmethod
    def registerpotential(cls, function):
        """Decorator to register a potential field factory"""
        cls.potentials[function.__name__] = function
        return function

    @classmethod
    def create(cls, name: str, **params):
        """Creates a registered field by name, rate fields first."""
        factory = cls.rate_fields.get(name) or cls.potentials.get(name)
        if factory is None:
            raise KeyError(
                f"unknown field '{name}', available: {', '.join(sorted({**cls.rate_fields, **cls.potentials}))}"
            )
        return factory(**params)


@dataclass(frozen=True)
class Partials:
    """∂R̃/∂t, ∂R̃/∂x, ∂R/∂t, ∂R/∂x at a point"""

    dRt_dt: float
    dRt_dx: float
    dR_dt: float
    dR_dx: float

    def along(self, t_dot: float, x_dot: float) -> Tuple[float, float]:
        """Total derivatives (dR̃/dτ, dR/dτ) along the velocity (ṫ, ẋ)."""
        return (
            self.dRt_dt * t_dot + self.dRt_dx * x_dot,
            self.dR_dt * t_dot + self.dR_dx * x_dot,
        )


def finite_difference_partials(
    r_tilde: ScalarField, r: ScalarField, t: float, x: float, step: Optional[float] = None
) -> Partials:
    """Central differences (f(u + h) - f(u - h))/(2h), error O(h²)."""
    h = INFLUNETSETTINGS.FD_STEP if step is None else step
    if not h > 0.0:
        raise ValueError(f"finite difference step must be > 0, got {h}")

    def central(function: ScalarField, along_t: bool) -> float:
        if along_t:
            return (function(t + h, x) - function(t - h, x)) / (2.0 * h)
        return (function(t, x + h) - function(t, x - h)) / (2.0 * h)

    return Partials(
        dRt_dt=central(r_tilde, True),
        dRt_dx=central(r_tilde, False),
        dR_dt=central(r, True),
        dR_dx=central(r, False),
    )


class RateField:
    """Reception rates r_p(t, x) and r_q(t, x).

    Field evaluation must be pure, fields are shared by concurrent integrations.
    """

    def __init__(self, r_p: ScalarField, r_q: ScalarField, name: str = "custom", params: Optional[Dict] = None):
        self._r_p = r_p
        self._r_q = r_q
        self.name = name
        self.params = dict(params or {})

    def __repr__(self) -> str:
        return f"RateField({self.name}, {self.params})"

    def rates(self, t: float, x: float) -> Tuple[float, float]:
        """Raw (r_p, r_q) at (t, x), not validated."""
        return self._r_p(t, x), self._r_q(t, x)

    def rates_at(self, t: float, x: float) -> RateSpec:
        """Validated rates at (t, x), raises RateDomainError outside the domain."""
        return RateSpec(*self.rates(t, x))

    def coefficients(
        self,
        t: float,
        x: float,
        t_dot: float,  # pylint: disable=W0613
        x_dot: float,  # pylint: disable=W0613
        truncation: Truncation = Truncation.full,
    ) -> Tuple[float, float]:
        """(dR̃/dτ, dR/dτ) from the local rates.

        ``leading`` keeps the leading order in r̃: dR̃/dτ = 0, dR/dτ = 2r̃r.
        """
        rates = self.rates_at(t, x)
        total, net = float(rates.total), float(rates.net)
        if Truncation(truncation) is Truncation.leading:
            return 0.0, 2.0 * total * net
        return rate_potential_derivatives(total, net)


class PotentialField:
    """Rate potentials R̃(t, x) and R(t, x).

    Partials come from ``partials`` when given (analytic), from central finite
    differences otherwise.
    """

    def __init__(
        self,
        r_tilde: ScalarField,
        r: ScalarField,
        partials: Optional[Callable[[float, float], Partials]] = None,
        name: str = "custom",
        params: Optional[Dict] = None,
        step: Optional[float] = None,
    ):
        self.r_tilde = r_tilde
        self.r = r
        self._analytic = partials
        self.name = name
        self.params = dict(params or {})
        self.step = step

    def __repr__(self) -> str:
        return f"PotentialField({self.name}, {self.params})"

    @property
    def has_analytic_partials(self) -> bool:
        return self._analytic is not None

    def finite_difference_partials(self, t: float, x: float, step: Optional[float] = None) -> Partials:
        return finite_difference_partials(self.r_tilde, self.r, t, x, step=step or self.step)

    def partials(self, t: float, x: float) -> Partials:
        if self._analytic is not None:
            return self._analytic(t, x)
        return self.finite_difference_partials(t, x)

    def coefficients(
        self,
        t: float,
        x: float,
        t_dot: float,
        x_dot: float,
        truncation: Truncation = Truncation.full,  # pylint: disable=W0613
    ) -> Tuple[float, float]:
        """Total derivatives (dR̃/dτ, dR/dτ) along (ṫ, ẋ)."""
        return self.partials(t, x).along(t_dot, x_dot)


@FieldRegistry.registerratefield
def constant(r_p: float = 0.0, r_q: float = 0.0) -> RateField:
    """Constant rates"""
    r_p, r_q = float(r_p), float(r_q)
    RateSpec(r_p, r_q)
    return RateField(
        lambda t, x: r_p,
        lambda t, x: r_q,
        name="constant",
        params={"r_p": r_p, "r_q": r_q},
    )


@FieldRegistry.registerratefield
def linear(
    r_p: float = 0.0,
    r_q: float = 0.0,
    grad_p_t: float = 0.0,
    grad_p_x: float = 0.0,
    grad_q_t: float = 0.0,
    grad_q_x: float = 0.0,
) -> RateField:
    """Rates with constant gradients: r_q(t, x) = r_q + grad_q_t·t + grad_q_x·x"""
    params = {
        "r_p": float(r_p),
        "r_q": float(r_q),
        "grad_p_t": float(grad_p_t),
        "grad_p_x": float(grad_p_x),
        "grad_q_t": float(grad_q_t),
        "grad_q_x": float(grad_q_x),
    }
    return RateField(
        lambda t, x: params["r_p"] + params["grad_p_t"] * t + params["grad_p_x"] * x,
        lambda t, x: params["r_q"] + params["grad_q_t"] * t + params["grad_q_x"] * x,
        name="linear",
        params=params,
    )


@FieldRegistry.registerratefield
def gaussian(
    r_p: float = 0.0,
    r_q: float = 0.0,
    amplitude_p: float = 0.0,
    amplitude_q: float = 0.0,
    center: float = 0.0,
    width: float = 1.0,
) -> RateField:
    """Background rates plus a gaussian bump in x: r_q(x) = r_q + amplitude_q·exp(-(x - center)²/(2·width²))"""
    if not float(width) > 0.0:
        raise ValueError(f"gaussian width must be > 0, got {width}")
    params = {
        "r_p": float(r_p),
        "r_q": float(r_q),
        "amplitude_p": float(amplitude_p),
        "amplitude_q": float(amplitude_q),
        "center": float(center),
        "width": float(width),
    }

    def bump(x: float) -> float:
        return math.exp(-((x - params["center"]) ** 2) / (2.0 * params["width"] ** 2))

    return RateField(
        lambda t, x: params["r_p"] + params["amplitude_p"] * bump(x),
        lambda t, x: params["r_q"] + params["amplitude_q"] * bump(x),
        name="gaussian",
        params=params,
    )


@FieldRegistry.registerpotential
def polynomial(alpha: float = 1.0, beta: float = 1.0, gamma: float = 1.0, analytic: bool = True) -> PotentialField:
    """Test potentials R̃ = α·x + β·t², R = γ·sin t

    With ``analytic`` the hand-coded partials are used, otherwise finite differences.
    """
    alpha, beta, gamma = float(alpha), float(beta), float(gamma)

    def partials(t: float, x: float) -> Partials:  # pylint: disable=W0613
        return Partials(dRt_dt=2.0 * beta * t, dRt_dx=alpha, dR_dt=gamma * math.cos(t), dR_dx=0.0)

    return PotentialField(
        lambda t, x: alpha * x + beta * t * t,
        lambda t, x: gamma * math.sin(t),
        partials=partials if analytic else None,
        name="polynomial",
        params={"alpha": alpha, "beta": beta, "gamma": gamma, "analytic": analytic},
    )


@FieldRegistry.registerpotential
def zero() -> PotentialField:
    """Vanishing potentials, the free particle"""
    return PotentialField(
        lambda t, x: 0.0,
        lambda t, x: 0.0,
        partials=lambda t, x: Partials(dRt_dt=0.0, dRt_dx=0.0, dR_dt=0.0, dR_dx=0.0),
        name="zero",
    )
