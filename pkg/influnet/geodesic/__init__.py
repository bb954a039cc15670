# -*- coding: utf-8 -*-
"""
Continuum layer: mean increments, rate fields and potentials, geodesic-form
equations, RK4 integration and analytic checks.
"""

from .christoffel import (
    Christoffels,
    PotentialDerivatives,
    christoffels,
    coordinate_conditions_residual,
    geodesic_quadratic_form,
    geodesic_rhs,
)
from .fields import FieldRegistry, Partials, PotentialField, RateField
from .increments import (
    base_increments,
    expected_increments,
    mean_increments,
    rate_potential_derivatives,
    second_increments,
)
from .integrator import integrate
from .oracle import (
    HyperbolicMotion,
    HyperbolicParams,
    geodesic_residuals,
    hyperbolic_solution,
    oracle_deviation,
    proper_time_extremum_check,
)

__all__ = [
    "Christoffels",
    "PotentialDerivatives",
    "christoffels",
    "coordinate_conditions_residual",
    "geodesic_quadratic_form",
    "geodesic_rhs",
    "FieldRegistry",
    "Partials",
    "PotentialField",
    "RateField",
    "base_increments",
    "expected_increments",
    "mean_increments",
    "rate_potential_derivatives",
    "second_increments",
    "integrate",
    "HyperbolicMotion",
    "HyperbolicParams",
    "geodesic_residuals",
    "hyperbolic_solution",
    "oracle_deviation",
    "proper_time_extremum_check",
]
