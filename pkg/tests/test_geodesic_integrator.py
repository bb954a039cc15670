# -*- coding: utf-8 -*-
import math
import re

import numpy as np
import pytest

from influnet.dynamics import RateSpec
from influnet.exceptions import DomainError
from influnet.geodesic.fields import FieldRegistry
from influnet.geodesic.integrator import geodesic_derivative, integrate, rk4_step
from influnet.geodesic.oracle import HyperbolicParams, hyperbolic_solution, oracle_deviation
from influnet.types import Truncation


class Test_geodesic_derivative:
    @staticmethod
    def test_free_particle_at_rest():
        result = geodesic_derivative(FieldRegistry.create("zero"), np.zeros(4))
        assert result.tolist() == [1.0, 0.0, 0.0, 0.0]

    @staticmethod
    def test_constant_field_leading():
        field = FieldRegistry.create("constant", r_q=0.01)
        result = geodesic_derivative(field, np.zeros(4), Truncation.leading)
        assert result.tolist() == pytest.approx([1.0, 0.0, 2e-4, 0.0])

    @staticmethod
    def test_rk4_step_keeps_rapidity_linear():
        field = FieldRegistry.create("constant", r_q=0.01)
        state = rk4_step(field, np.zeros(4), 10.0, Truncation.leading)
        assert state[2] == pytest.approx(2e-3)
        assert state[0] == pytest.approx(math.sinh(2e-3) / 2e-4, rel=1e-12)


class Test_integrate:
    @staticmethod
    def test_free_particle():
        trajectory = integrate(FieldRegistry.create("zero"), (0.0, 0.0, 0.5), 10.0, 1.0)
        assert len(trajectory) == 11
        assert trajectory.source == "continuum"
        assert trajectory[-1].t == pytest.approx(10.0 * math.cosh(0.5), rel=1e-12)
        assert trajectory[-1].x == pytest.approx(10.0 * math.sinh(0.5), rel=1e-12)
        assert trajectory[-1].v == pytest.approx(math.tanh(0.5))
        assert trajectory.diagnostics == []

    @staticmethod
    def test_last_step_is_shortened():
        trajectory = integrate(FieldRegistry.create("zero"), (0.0, 0.0, 0.0), 2.5, 1.0)
        assert trajectory.taus.tolist() == [0.0, 1.0, 2.0, 2.5]

    @staticmethod
    def test_tau_interval():
        trajectory = integrate(FieldRegistry.create("zero"), (1.0, 2.0, 0.0), (1.0, 3.0), 0.5)
        assert trajectory.taus.tolist() == [1.0, 1.5, 2.0, 2.5, 3.0]
        assert (trajectory[0].t, trajectory[0].x) == (1.0, 2.0)
        assert trajectory[-1].t == pytest.approx(3.0)

    @staticmethod
    @pytest.mark.parametrize("tau_span, step", [(10.0, 0.0), (10.0, -1.0), ((5.0, 1.0), 1.0)])
    def test_invalid_arguments(tau_span, step):
        with pytest.raises(DomainError):
            integrate(FieldRegistry.create("zero"), (0.0, 0.0, 0.0), tau_span, step)

    @staticmethod
    def test_hyperbolic_motion_leading():
        field = FieldRegistry.create("constant", r_q=0.01)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0, truncation=Truncation.leading)
        motion = hyperbolic_solution(HyperbolicParams.from_rates(RateSpec(0.0, 0.01)))
        max_error, relative = oracle_deviation(trajectory, motion)
        assert relative < 1e-8
        assert max_error < 1e-5
        assert trajectory.fit_rapidity_slope()[0] == pytest.approx(2e-4, rel=1e-9)

    @staticmethod
    def test_full_truncation_reports_drift():
        field = FieldRegistry.create("constant", r_q=0.01)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0)
        assert "max norm drift" in trajectory.diagnostics[0]
        assert "(renormalized)" in trajectory.diagnostics[0]
        assert trajectory.fit_rapidity_slope()[0] == pytest.approx(2e-4 * (1.0 + 0.01 / 1.98), rel=1e-9)

    @staticmethod
    def test_without_renormalization():
        field = FieldRegistry.create("constant", r_q=0.01)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0, renormalize=False)
        assert "(renormalized)" not in trajectory.diagnostics[0]
        assert trajectory[-1].t > integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0)[-1].t

    @staticmethod
    def test_leaving_rate_domain_truncates():
        field = FieldRegistry.create("linear", r_q=0.01, grad_q_t=0.01)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 100.0, 1.0)
        assert trajectory.truncated
        assert len(trajectory) < 60
        assert "integration stopped" in trajectory.diagnostics[0]


def reported_drift(trajectory):
    return float(re.search(r"= ([0-9.e+-]+)", trajectory.diagnostics[0]).group(1))


class Test_convergence:
    @staticmethod
    def test_step_halving_is_fourth_order():
        field = FieldRegistry.create("constant", r_q=0.1)
        motion = hyperbolic_solution(HyperbolicParams.from_rates(RateSpec(0.0, 0.1)))
        errors = [
            oracle_deviation(integrate(field, (0.0, 0.0, 0.0), 100.0, step, truncation=Truncation.leading), motion)[0]
            for step in (2.0, 1.0, 0.5)
        ]
        assert errors[0] / errors[1] == pytest.approx(16.0, rel=0.05)
        assert errors[1] / errors[2] == pytest.approx(16.0, rel=0.05)


class Test_norm_drift:
    @staticmethod
    def test_drift_accumulates_without_renormalization():
        field = FieldRegistry.create("constant", r_q=0.01)
        dRt_dtau, _ = field.coefficients(0.0, 0.0, 1.0, 0.0)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0, renormalize=False)
        assert reported_drift(trajectory) == pytest.approx(abs(math.expm1(2.0 * dRt_dtau * 1000.0)), rel=1e-3)

    @staticmethod
    def test_renormalization_bounds_drift_to_one_step():
        field = FieldRegistry.create("constant", r_q=0.01)
        dRt_dtau, _ = field.coefficients(0.0, 0.0, 1.0, 0.0)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0)
        assert reported_drift(trajectory) == pytest.approx(abs(math.expm1(2.0 * dRt_dtau * 10.0)), rel=1e-3)

    @staticmethod
    def test_leading_truncation_has_no_drift():
        field = FieldRegistry.create("constant", r_q=0.01)
        trajectory = integrate(field, (0.0, 0.0, 0.0), 1000.0, 10.0, truncation=Truncation.leading, renormalize=False)
        assert trajectory.diagnostics == []
