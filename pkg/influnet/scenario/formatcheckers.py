# -*- coding: utf-8 -*-
"""
Scenario Format Checker for rational number formats.
"""

from typing import Any

from jsonschema import FormatChecker

from ..dynamics import MAX_TOTAL_RATE
from ..types import PositiveRational, Rational

__all__ = ["ScenarioFormatChecker"]


class ScenarioFormatChecker(FormatChecker):
    """
    ScenarioFormatChecker subclasses jsonschema.FormatChecker to provide the scenario formats.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)

        # update FormatChecker instance's format checkers with the scenario format checkers
        self.checkers.update(self.scenario_format_checkers)

    @property
    def scenario_format_checkers(self) -> dict:
        """
        Returns dict of scenario formats: rational, positive-rational, rate
        """
        return {
            "rational": (lambda v: self._is_type(Rational.validate, v), ()),
            "positive-rational": (
                lambda v: self._is_type(PositiveRational.validate, v),
                (),
            ),
            "rate": (lambda v: self._is_rate(v), ()),
        }

    @staticmethod
    def _is_type(is_type: Any, value: Any) -> bool:
        """
        Helper function _is_type returns `True` when `is_type(value)` does not raise an exception, `False` otherwise

        :param is_type: The type (or validator) to check against
        :param value: Value to check
        """
        try:
            is_type(value)
            return True
        except Exception:  # pylint: disable=W0703 # we do not care which exception occurs
            return False

    @classmethod
    def _is_rate(cls, value: Any) -> bool:
        """A per-event reception rate: a rational in [0, 1/2]."""
        if not cls._is_type(Rational.validate, value):
            return False
        return 0 <= Rational.validate(value) <= MAX_TOTAL_RATE
