# -*- coding: utf-8 -*-
import json

import pytest
from jsonschema.exceptions import ValidationError

from influnet.exceptions import (
    INPUT_ERRORS,
    DegenerateIntervalError,
    DomainError,
    InfluNetJSONDecodeError,
    RateDomainError,
    ScenarioValidationError,
    UnknownEventError,
    highlight_line,
)


class Test_highlight_line:
    @staticmethod
    def test_marks_error_line():
        doc = "first\nsecond\nthird"
        result = highlight_line(doc, 2)
        assert result.splitlines() == [
            "1: first",
            "2: second<---- Error line:2",
            "3: third",
        ]

    @staticmethod
    def test_marks_column():
        result = highlight_line("abc\ndef", 1, 2)
        assert result.splitlines()[1] == "    ^---- Exact Error position"


class Test_InfluNetJSONDecodeError:
    @staticmethod
    def test_carries_position():
        doc = '{\n    "a": 1\n    "b": 2\n}'
        with pytest.raises(json.JSONDecodeError) as exc_info:
            json.loads(doc)
        error = InfluNetJSONDecodeError("scenario.json", exc_info.value)
        assert error.lineno == 3
        assert "scenario.json: Expecting ',' delimiter" in str(error)
        assert "<---- Error line:3" in str(error)


class Test_ScenarioValidationError:
    @staticmethod
    def test_is_ValidationError():
        assert issubclass(ScenarioValidationError, ValidationError)

    @staticmethod
    def test_message_with_path_and_line():
        error = ScenarioValidationError("bad rate", "rates.r_q", 7)
        assert error.path_text == "rates.r_q"
        assert error.lineno == 7
        assert str(error).startswith("bad rate (at rates.r_q, line 7)")

    @staticmethod
    def test_message_root_without_line():
        error = ScenarioValidationError("seed is required")
        assert error.lineno is None
        assert str(error).startswith("seed is required (at <root>)")


class Test_hierarchy:
    @staticmethod
    @pytest.mark.parametrize(
        "exception, base",
        [
            (DegenerateIntervalError, DomainError),
            (RateDomainError, DomainError),
            (DomainError, ValueError),
            (UnknownEventError, KeyError),
        ],
    )
    def test_subclass(exception, base):
        assert issubclass(exception, base)

    @staticmethod
    def test_domain_errors_are_not_input_errors():
        assert not issubclass(DomainError, INPUT_ERRORS)
        assert issubclass(ScenarioValidationError, INPUT_ERRORS)
