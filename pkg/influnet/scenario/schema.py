# -*- coding: utf-8 -*-
"""
Scenario Schema module. Validates scenario documents against the versioned scenario JSON Schema.
"""

# pylint: disable=C0301 # Line too long

import json
import re
from pathlib import Path
from typing import Iterable, Optional, Union

from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError

from ..exceptions import ScenarioValidationError
from .formatcheckers import ScenarioFormatChecker

__all__ = ["ScenarioSchema", "format_path", "locate_line"]

SCHEMA_DIR = Path(__file__).parent


def format_path(path: Iterable[Union[str, int]]) -> str:
    """Formats a JSON path like ``initial.k`` or ``outputs[0]``."""
    text = ""
    for element in path:
        if isinstance(element, int):
            text += f"[{element}]"
        else:
            text += f".{element}" if text else str(element)
    return text


def locate_line(document: str, path: Iterable[Union[str, int]]) -> Optional[int]:
    """Best-effort line number (1-based) of the key at the end of ``path`` in a JSON or YAML document.

    Keys are searched in order, each one after the line of its parent key.
    """
    lines = document.splitlines()
    position = 0
    found = None
    for element in path:
        if isinstance(element, int):
            continue
        key = re.compile(r"""(["']?)""" + re.escape(str(element)) + r"""\1\s*:""")
        for lineno in range(position, len(lines)):
            if key.search(lines[lineno]):
                found = position = lineno
                break
        else:
            return found + 1 if found is not None else None
    return found + 1 if found is not None else None


class ScenarioSchema:
    """Creates a ScenarioSchema instance of specified version.
    The :py:meth:`validate` method validates a deserialized scenario document.

    :param version: Scenario schema version (Default value = 1)
    """

    _schemas: dict = {}

    def __init__(self, version: int = 1):
        self._version = version
        if version not in self._schemas:
            schema_file = SCHEMA_DIR / f"scenario-schema-{version}.json"
            if not schema_file.is_file():
                raise ScenarioValidationError(f"unsupported scenario schemaVersion: {version}", "schemaVersion")
            with open(schema_file, "r", encoding="utf-8") as schema_fh:
                self._schemas[version] = json.load(schema_fh)
        self._schema = self._schemas[version]

    @property
    def version(self) -> int:
        return self._version

    @property
    def schema(self) -> dict:
        return self._schema

    def validate(self, scenario: dict, document: str = "") -> None:
        """Validates a scenario against the schema, raises ScenarioValidationError on the first error.

        :param scenario: deserialized scenario
        :param document: raw scenario text used to locate the error line
        """
        validator = Draft7Validator(self._schema, format_checker=ScenarioFormatChecker())
        errors = sorted(validator.iter_errors(scenario), key=lambda error: [str(element) for element in error.absolute_path])
        if errors:
            error: ValidationError = errors[0]
            path = list(error.absolute_path)
            raise ScenarioValidationError(
                error.message, format_path(path), locate_line(document, path)
            )
