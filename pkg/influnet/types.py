# -*- coding: utf-8 -*-
"""
InfluNet types.
"""
from enum import Enum
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "PositiveRational",
    "Side",
    "EventKind",
    "ChainRole",
    "GapMode",
    "Mode",
    "Arithmetic",
    "Truncation",
    "TrajectoryFormat",
]


class Rational(Fraction):
    """
    Rational number accepted by pydantic models.
    Accepts ints, decimal strings ("0.25"), fraction strings ("1/4"), floats and Fractions.
    Floats are converted through their shortest repr, so 0.1 becomes 1/10.
    """

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def _parse(cls, value: Union[str, int, float, Fraction]) -> Fraction:
        if isinstance(value, bool):
            raise TypeError("rational required, got bool")
        if isinstance(value, float):
            value = str(value)
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError, TypeError):
            raise ValueError(f"invalid rational: '{value}'") from None

    @classmethod
    def _check(cls, value: Fraction) -> None:
        """Hook for subclasses to restrict the domain."""

    @classmethod
    def validate(cls, value):
        """
        Validate method is automatically called pydantic.
        """
        number = cls._parse(value)
        cls._check(number)
        return cls(number)


class PositiveRational(Rational):
    """
    Rational number > 0 (e.g. a Doppler-like factor k).
    """

    @classmethod
    def _check(cls, value: Fraction) -> None:
        if value <= 0:
            raise ValueError(f"invalid value: '{value}': must be > 0")


class Side(str, Enum):
    """Side of the particle in the 1+1 configuration, named after its observer."""

    P = "P"
    Q = "Q"


class EventKind(str, Enum):
    """Kinds of influence events"""

    emission = "emission"
    reception = "reception"
    observer_reception = "observer-reception"


class ChainRole(str, Enum):
    """Role of a chain in the influence network"""

    particle = "particle"
    observer = "observer"


class GapMode(str, Enum):
    """Inter-reception gap distributions"""

    deterministic = "deterministic"
    stochastic = "stochastic"
    geometric = "geometric"


class Mode(str, Enum):
    """Scenario pipelines"""

    discrete = "discrete"
    continuum = "continuum"
    analytic = "analytic"
    compare = "compare"


class Arithmetic(str, Enum):
    """Numeric mode of the discrete simulation"""

    exact = "exact"
    floating = "float"


class Truncation(str, Enum):
    """Coefficient order of the geodesic-form equations"""

    full = "full"
    leading = "leading"


class TrajectoryFormat(str, Enum):
    """Trajectory output formats"""

    csv = "csv"
    json = "json"
