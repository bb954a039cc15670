# -*- coding: utf-8 -*-
"""
Scenario module. A scenario configures one run of the discrete, continuum and
analytic pipelines.

Scenarios are validated against the scenario JSON Schema first (line-precise
errors) and then parsed into pydantic models which check the constraints
spanning several keys.
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=R0903 # Too few public methods
# pylint: disable=E0213 # Method should have "self" as first argument (pydantic validators)

import math
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import BaseModel, Extra, Field, ValidationError, confloat, conint, root_validator

from ..dynamics import RateSpec
from ..exceptions import DomainError, ScenarioValidationError
from ..geodesic.fields import FieldRegistry, RateField
from ..types import Arithmetic, GapMode, Mode, PositiveRational, Rational, Truncation
from ..utils import deserialize
from .schema import ScenarioSchema, format_path, locate_line

__all__ = ["Scenario", "load_scenario", "scenario_from_dict"]


class RatesModel(BaseModel):
    """Constant per-event reception rates"""

    r_p: Rational = Rational(0)
    r_q: Rational = Rational(0)

    class Config:
        extra = Extra.forbid


class RateFieldModel(BaseModel):
    """A registered rate field or potential with its parameters"""

    name: str
    params: Dict[str, Union[bool, float]] = {}

    class Config:
        extra = Extra.forbid


class InitialModel(BaseModel):
    """Initial state, either k or the rapidity phi"""

    k: Optional[PositiveRational] = None
    phi: Optional[float] = None
    t: float = 0.0
    x: float = 0.0

    class Config:
        extra = Extra.forbid

    @root_validator(skip_on_failure=True)
    def _k_or_phi(cls, values):
        if values.get("k") is not None and values.get("phi") is not None:
            raise ValueError("specify either k or phi, not both")
        return values

    @property
    def k_value(self) -> Fraction:
        """Initial k, exact when given as k."""
        if self.k is not None:
            return Fraction(self.k)
        if self.phi is not None:
            return Fraction(math.exp(self.phi))
        return Fraction(1)

    @property
    def phi_value(self) -> float:
        if self.phi is not None:
            return self.phi
        return math.log(self.k_value)


class TolerancesModel(BaseModel):
    """Relative tolerances of the compare report"""

    slope: float = 0.02
    oracle: float = 1e-6
    agreement: float = 0.02

    class Config:
        extra = Extra.forbid


class OutputsModel(BaseModel):
    """Output location, the directory defaults to the OUTPUT_DIR setting"""

    directory: Optional[str] = None
    prefix: Optional[str] = None

    class Config:
        extra = Extra.forbid


class Scenario(BaseModel):
    """A validated scenario"""

    schema_version: int = Field(1, alias="schemaVersion")
    name: str
    description: str = ""
    mode: Mode
    rates: Optional[RatesModel] = None
    rate_field: Optional[RateFieldModel] = None
    initial: InitialModel = InitialModel()
    receptions: Optional[conint(gt=0)] = None
    tau_span: Optional[confloat(gt=0)] = None
    step: Optional[confloat(gt=0)] = None
    seed: Optional[conint(ge=0)] = None
    gap_mode: GapMode = GapMode.deterministic
    arithmetic: Arithmetic = Arithmetic.floating
    truncation: Truncation = Truncation.full
    renormalize: bool = True
    no_op_probability: confloat(ge=0, lt=1) = 0.0
    tolerances: TolerancesModel = TolerancesModel()
    outputs: OutputsModel = OutputsModel()

    class Config:
        extra = Extra.forbid
        allow_population_by_field_name = True

    @root_validator(skip_on_failure=True)
    def _mode_requirements(cls, values):
        mode = values["mode"]
        rates, rate_field = values.get("rates"), values.get("rate_field")
        if rates is None and rate_field is None:
            raise ValueError("one of rates or rate_field is required")
        if rate_field is not None:
            try:
                FieldRegistry.create(rate_field.name, **rate_field.params)
            except (TypeError, ValueError, KeyError) as exc:
                raise ValueError(f"rate_field '{rate_field.name}': {exc}") from None
        if rates is not None:
            try:
                RateSpec(rates.r_p, rates.r_q)
            except DomainError as exc:
                raise ValueError(str(exc)) from None

        if mode in (Mode.discrete, Mode.compare):
            if values.get("receptions") is None:
                raise ValueError(f"receptions is required in {mode.value} mode")
            if values.get("seed") is None:
                raise ValueError(f"seed is required in {mode.value} mode")
            if rate_field is not None and rate_field.name not in FieldRegistry.rate_fields:
                raise ValueError(f"{mode.value} mode needs reception rates, '{rate_field.name}' is a potential")
        if mode in (Mode.continuum, Mode.analytic) and values.get("tau_span") is None:
            raise ValueError(f"tau_span is required in {mode.value} mode")
        if mode in (Mode.analytic, Mode.compare):
            constant = cls._constant_rates(rates, rate_field)
            if constant is None:
                raise ValueError(f"{mode.value} mode needs constant rates")
            if not constant.net > 0:
                raise ValueError(f"{mode.value} mode needs a = 2(r_p + r_q)(r_q - r_p) > 0, got r_p={constant.r_p} r_q={constant.r_q}")
        if values.get("step") is None and cls._constant_rates(rates, rate_field) is None:
            if mode is not Mode.discrete:
                raise ValueError("step is required unless the rates are constant")
        return values

    @staticmethod
    def _constant_rates(rates: Optional[RatesModel], rate_field: Optional[RateFieldModel]) -> Optional[RateSpec]:
        if rates is not None:
            return RateSpec(Fraction(rates.r_p), Fraction(rates.r_q))
        if rate_field is not None and rate_field.name == "constant":
            params = {"r_p": 0.0, "r_q": 0.0, **rate_field.params}
            return RateSpec(Rational.validate(params["r_p"]), Rational.validate(params["r_q"]))
        return None

    @property
    def constant_rates(self) -> Optional[RateSpec]:
        """Constant rates of the scenario, None for position-dependent fields."""
        return self._constant_rates(self.rates, self.rate_field)

    @property
    def exact(self) -> bool:
        return self.arithmetic is Arithmetic.exact

    @property
    def prefix(self) -> str:
        return self.outputs.prefix or self.name

    def rate_source(self):
        """RateSpec (exact or float) for the discrete simulator, or a RateField."""
        constant = self.constant_rates
        if constant is not None:
            if self.exact:
                return constant
            return RateSpec(float(constant.r_p), float(constant.r_q))
        return self.field()

    def field(self) -> Union[RateField, object]:
        """The continuum field: a registered field, or a constant field for plain rates."""
        if self.rate_field is not None:
            return FieldRegistry.create(self.rate_field.name, **self.rate_field.params)
        return FieldRegistry.create("constant", r_p=float(self.rates.r_p), r_q=float(self.rates.r_q))

    def integration_step(self) -> float:
        """The scenario step, by default the proper time quantum 1/(2r̃)."""
        if self.step is not None:
            return self.step
        return 1.0 / (2.0 * float(self.constant_rates.total))


def _validation_error(exc: ValidationError, document: str) -> ScenarioValidationError:
    """Maps the first pydantic error to a ScenarioValidationError."""
    error = exc.errors()[0]
    path = [element for element in error["loc"] if element != "__root__"]
    path = ["schemaVersion" if element == "schema_version" else element for element in path]
    return ScenarioValidationError(
        error["msg"], format_path(path), locate_line(document, path)
    )


def scenario_from_dict(data: dict, document: str = "", seed: Optional[int] = None) -> Scenario:
    """Validates a deserialized scenario (schema, then model) and returns the Scenario.

    :param data: deserialized scenario
    :param document: raw text, used to locate errors
    :param seed: overrides the scenario seed
    """
    if seed is not None:
        data = {**data, "seed": seed}
    version = data.get("schemaVersion", 1) if isinstance(data.get("schemaVersion", 1), int) else 1
    ScenarioSchema(version=version).validate(data, document)
    try:
        return Scenario.parse_obj(data)
    except ValidationError as exc:
        raise _validation_error(exc, document) from None


def load_scenario(path: Union[str, Path], seed: Optional[int] = None) -> Scenario:
    """Loads a scenario file (JSON or YAML)."""
    data, document = deserialize(path)
    return scenario_from_dict(data, document, seed=seed)
