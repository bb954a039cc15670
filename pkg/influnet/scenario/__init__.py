# -*- coding: utf-8 -*-
"""
Scenario schema, format checkers and loading.
"""

from .formatcheckers import ScenarioFormatChecker
from .scenario import Scenario, load_scenario, scenario_from_dict
from .schema import ScenarioSchema

__all__ = [
    "Scenario",
    "ScenarioFormatChecker",
    "ScenarioSchema",
    "load_scenario",
    "scenario_from_dict",
]
