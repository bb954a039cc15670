# -*- coding: utf-8 -*-
"""All InfluNet exceptions."""

# pylint: disable=C0301 # Line too long

from typing import Optional

from jsonschema.exceptions import ValidationError

__all__ = [
    "InfluNetJSONDecodeError",
    "DeserializeError",
    "ScenarioValidationError",
    "NetworkStructureError",
    "UnknownEventError",
    "DomainError",
    "DegenerateIntervalError",
    "RateDomainError",
    "INPUT_ERRORS",
]


def highlight_line(doc: str, err_lineno: int, err_colno: Optional[int] = None) -> str:
    """Adds line numbers to a document and highlights the erroneous line.

    :param doc: the document (JSON or YAML text)
    :param err_lineno: Erroneous line number (1-based)
    :param err_colno: Optional exact error position on the erroneous line
    """
    doc_list: list = []
    lines_total = doc.count("\n")
    indent = len(str(lines_total + 1))
    for lineno, line in enumerate(doc.splitlines(), start=1):
        if lineno != err_lineno:
            doc_list.append(
                "{lineno:>{indent}}: {line}".format(
                    lineno=lineno, indent=indent, line=line
                )
            )
            continue
        doc_list.append(
            "{lineno:>{indent}}: {line}<---- Error line:{err_lineno}".format(
                lineno=lineno, indent=indent, line=line, err_lineno=err_lineno
            )
        )
        if err_colno is not None:
            doc_list.append(
                "{_:{err_indent}}^---- Exact Error position".format(
                    _="", err_indent=indent + 1 + err_colno
                )
            )
    return "\n".join(doc_list)


class InfluNetJSONDecodeError(ValueError):
    """Raised when a scenario or network file is not valid JSON"""

    def __init__(self, message: str = "", original_exception=None):
        self.lineno = original_exception.lineno
        self.colno = original_exception.colno
        doc_highlighted = highlight_line(
            original_exception.doc, original_exception.lineno, original_exception.colno
        )
        super().__init__(
            f"{message}: {original_exception.msg}. Error pos:{original_exception.pos} on line:{original_exception.lineno} on col:{original_exception.colno}.\nJSON document:\n{doc_highlighted}"
        )


class DeserializeError(ValueError):
    """Raised when a file is neither a JSON nor a YAML mapping."""


class ScenarioValidationError(ValidationError):
    """A scenario violates the scenario JSON schema or the module domains."""

    def __init__(
        self, message: str = "", path: str = "", lineno: Optional[int] = None
    ):
        self.path_text = path
        self.lineno = lineno
        location = f" (at {path or '<root>'}"
        location += f", line {lineno})" if lineno else ")"
        super().__init__(f"{message}{location}")


class NetworkStructureError(ValueError):
    """Raised when an influence network violates its structural invariants."""


class UnknownEventError(KeyError):
    """Raised when an event or chain id is not part of the network."""


class DomainError(ValueError):
    """A quantity is outside the domain of the operation, e.g. k <= 0 or |v| >= 1."""


class DegenerateIntervalError(DomainError):
    """An interval between receptions contains no emission event (N = 0)."""


class RateDomainError(DomainError):
    """Reception rates are negative or their sum is outside (0, 1/2]."""


# exceptions mapped to the CLI input error exit code
INPUT_ERRORS = (
    InfluNetJSONDecodeError,
    DeserializeError,
    ScenarioValidationError,
    NetworkStructureError,
    UnknownEventError,
    FileNotFoundError,
    IsADirectoryError,
)
