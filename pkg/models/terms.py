"""Causal terms: labels, elementary terms and the term AST."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Tuple, Union

# Labels and atoms share one lexical shape: an identifier, optionally
# strong-negated with a leading '-', optionally followed by an argument list
# (one level of nesting) and a suffix, e.g. throw(suzy)_0, dead-1 or not(-dead_3).
NAME_PATTERN = r"-?[A-Za-z][A-Za-z0-9_\-]*(?:\((?:[A-Za-z0-9_,\-]|\([A-Za-z0-9_,\-]*\))*\)[A-Za-z0-9_\-]*)?"
NAME_RE = re.compile(rf"^{NAME_PATTERN}$")

Label = str

MAX_SIGN = 2


def is_valid_name(name: str) -> bool:
    return bool(NAME_RE.match(name))


@dataclass(frozen=True, slots=True, order=True)
class ElementaryTerm:
    """A label under 0, 1 or 2 negations (l, ~l, ~~l)."""

    base: Label
    sign: int = 0

    def __post_init__(self) -> None:
        if not self.base:
            raise ValueError("Label must not be empty")
        if self.sign < 0:
            raise ValueError("Negation depth must not be negative")
        if self.sign > MAX_SIGN:
            # ~~~t = ~t
            object.__setattr__(self, "sign", 2 - self.sign % 2)

    def negate(self) -> "ElementaryTerm":
        return ElementaryTerm(self.base, 1 if self.sign != 1 else 2)

    def double_negation(self) -> "ElementaryTerm":
        return ElementaryTerm(self.base, 1 if self.sign == 1 else 2)

    def __str__(self) -> str:
        return "~" * self.sign + self.base


@dataclass(frozen=True, slots=True)
class LabelTerm:
    name: Label

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Product:
    """Product of factors; the empty product is 1."""

    factors: Tuple["CausalTerm", ...] = ()

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "(" + " * ".join(str(factor) for factor in self.factors) + ")"


@dataclass(frozen=True, slots=True)
class Sum:
    """Sum of addends; the empty sum is 0."""

    addends: Tuple["CausalTerm", ...] = ()

    def __str__(self) -> str:
        if not self.addends:
            return "0"
        return "(" + " + ".join(str(addend) for addend in self.addends) + ")"


@dataclass(frozen=True, slots=True)
class App:
    left: "CausalTerm"
    right: "CausalTerm"

    def __str__(self) -> str:
        return f"({self.left}.{self.right})"


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "CausalTerm"

    def __str__(self) -> str:
        return f"~{self.operand}"


CausalTerm = Union[LabelTerm, Product, Sum, App, Neg]

ONE_TERM = Product(())
ZERO_TERM = Sum(())


def elementary_term(term: ElementaryTerm) -> CausalTerm:
    """Term spelling of an elementary term."""
    result: CausalTerm = LabelTerm(term.base)
    for _ in range(term.sign):
        result = Neg(result)
    return result
