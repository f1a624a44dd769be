"""Error types raised by the engine."""
from __future__ import annotations

from typing import Sequence


class EcjError(Exception):
    """Base class for every domain error of the engine."""


class ProgramSyntaxError(EcjError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ReservedTokenError(ProgramSyntaxError):
    """`not` used as an atom, or an atom spelled like a `not(A)` marker."""


class DuplicateLabelError(EcjError, ValueError):
    def __init__(self, label: str, rule_indexes: Sequence[int]) -> None:
        self.label = label
        self.rule_indexes = tuple(rule_indexes)
        positions = ", ".join(str(index + 1) for index in self.rule_indexes)
        super().__init__(f"Label '{label}' is shared by rules {positions}")


class TermSyntaxError(EcjError, ValueError):
    pass


class UnknownAtomError(EcjError, KeyError):
    def __init__(self, atom: str) -> None:
        self.atom = atom
        super().__init__(atom)

    def __str__(self) -> str:
        return f"Unknown atom: {self.atom}"


class ArityError(EcjError, ValueError):
    pass


class ResourceLimitError(EcjError, RuntimeError):
    def __init__(self, what: str, limit: int, observed: int) -> None:
        self.what = what
        self.limit = limit
        self.observed = observed
        super().__init__(f"{what} limit exceeded: {observed} > {limit}")
