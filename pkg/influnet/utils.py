# -*- coding: utf-8 -*-
"""
Various utils and helpers used by InfluNet
"""

# pylint: disable=C0301 # Line too long
# pylint: disable=C0116 # Missing function or method docstring

import json
import math
import sys
from fractions import Fraction
from functools import wraps
from pathlib import Path
from typing import Any, Iterator, Tuple, Union

import yaml
from loguru import logger

from .exceptions import INPUT_ERRORS, DeserializeError, InfluNetJSONDecodeError

__all__ = [
    "Number",
    "deserialize",
    "read_text",
    "ListLike",
    "exitOnException",
    "exact_sqrt",
    "is_exact",
    "to_number",
    "EXIT_OK",
    "EXIT_TOLERANCE",
    "EXIT_INPUT_ERROR",
]

Number = Union[int, Fraction, float]

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INPUT_ERROR = 2


def read_text(datasource: Union[str, Path]) -> str:
    """Reads a UTF-8 text file."""
    with open(datasource, "r", encoding="utf-8") as text_file:
        return text_file.read()


def deserialize(datasource: Union[str, Path]) -> Tuple[dict, str]:
    """
    deserialize de-serializes JSON or YAML from a file to a python dict.

    Files ending in ``.json`` must be JSON, a JSON syntax error raises
    InfluNetJSONDecodeError pointing at the offending line.
    Other files are tried as JSON first and as YAML second.
    DeserializeError is raised if the result is not a dict.

    Returns the dict and the raw document text (used to locate schema errors).

    :param datasource: A file to deserialize
    """
    data = read_text(datasource)

    if str(datasource).endswith(".json"):
        try:
            _data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise InfluNetJSONDecodeError(f"{datasource}", exc) from None
    else:
        try:
            _data = json.loads(data)
        except (json.JSONDecodeError, TypeError):
            try:
                _data = yaml.safe_load(data)
            except yaml.YAMLError:
                _data = None

    if not isinstance(_data, dict):
        raise DeserializeError(f"deserialize: Could not deserialize {datasource}.")

    return _data, data


class ListLike:
    """Makes objects `feel` like a read-only list.

    Implements required dunder methods and common methods used to access list data.
    """

    _list: list = []

    def __iter__(self) -> Iterator[Any]:
        return iter(self._list)

    def __len__(self) -> int:
        return len(self._list)

    def __contains__(self, item: Any) -> bool:
        return item in self._list

    def __getitem__(self, index):
        return self._list[index]

    def __eq__(self, other: Any) -> bool:
        return list(self._list) == list(other)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._list})"


def exitOnException(wrapped_function):
    """sys.exit(2) on input errors, sys.exit(1) on any other exception"""

    @wraps(wrapped_function)
    def exitOnException_wrapper(*args, **kwargs):
        """wrapper function"""
        try:
            return wrapped_function(*args, **kwargs)
        except INPUT_ERRORS as exc:
            logger.bind(task="stderr").error(str(exc))
            sys.exit(EXIT_INPUT_ERROR)
        except Exception:  # pylint: disable=W0703
            sys.exit(EXIT_TOLERANCE)

    return exitOnException_wrapper


def is_exact(*values: Any) -> bool:
    """True if all values are ints or Fractions (rational mode)."""
    return all(isinstance(value, (int, Fraction)) for value in values)


def exact_sqrt(value: Number) -> Number:
    """Square root which stays rational when ``value`` is a rational perfect square.

    >>> exact_sqrt(Fraction(9, 4))
    Fraction(3, 2)
    >>> exact_sqrt(2.25)
    1.5
    """
    if value < 0:
        raise ValueError("exact_sqrt: negative radicand")
    if is_exact(value):
        value = Fraction(value)
        num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
        if num * num == value.numerator and den * den == value.denominator:
            return Fraction(num, den)
        return math.sqrt(value)
    return math.sqrt(value)


def to_number(value: Union[str, Number], exact: bool = True) -> Number:
    """Converts ``"3/4"``, ``"0.25"``, ints, floats and Fractions to a Fraction (exact) or float."""
    if isinstance(value, float) and exact:
        value = Fraction(str(value))
    number = Fraction(value) if isinstance(value, (str, int, Fraction)) else value
    return number if exact else float(number)
