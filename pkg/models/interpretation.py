"""Interpretations, query literals and the models built from them."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Mapping, Tuple

from .justification import Justification
from .value import ONE, ZERO, CausalValue

Atom = str


@dataclass(frozen=True, slots=True)
class Interpretation:
    """Mapping from atoms to causal values; unmapped atoms are 0.

    Zero entries are not stored, so two interpretations that agree
    pointwise compare equal.
    """

    values: Mapping[Atom, CausalValue] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "values",
            {atom: value for atom, value in self.values.items() if not value.is_zero},
        )

    @classmethod
    def bottom(cls) -> "Interpretation":
        return cls({})

    @classmethod
    def top(cls, atoms: Iterable[Atom]) -> "Interpretation":
        return cls({atom: ONE for atom in atoms})

    def __getitem__(self, atom: Atom) -> CausalValue:
        return self.values.get(atom, ZERO)

    def get(self, atom: Atom) -> CausalValue:
        return self.values.get(atom, ZERO)

    @property
    def support(self) -> FrozenSet[Atom]:
        return frozenset(self.values)

    def items(self) -> List[Tuple[Atom, CausalValue]]:
        return sorted(self.values.items())

    def leq(self, other: "Interpretation") -> bool:
        """Pointwise order."""
        from services.algebra import leq

        return all(leq(value, other[atom]) for atom, value in self.values.items())

    def __hash__(self) -> int:
        return hash(frozenset(self.values.items()))


class LiteralKind(enum.Enum):
    PLAIN = ""
    NOT = "not"
    UNDEF = "undef"


@dataclass(frozen=True, slots=True)
class QLiteral:
    """Query literal: ``A``, ``not A`` or ``undef A``."""

    atom: Atom
    kind: LiteralKind = LiteralKind.PLAIN

    def __str__(self) -> str:
        if self.kind is LiteralKind.PLAIN:
            return self.atom
        return f"{self.kind.value} {self.atom}"


@dataclass(frozen=True, slots=True)
class CausalWfm:
    """Least and greatest fixpoints of the squared reduct operator."""

    lfp: Interpretation
    gfp: Interpretation
    atoms: FrozenSet[Atom]
    iterations: int = 0


class Truth(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


@dataclass(frozen=True, slots=True)
class ThreeValuedModel:
    values: Mapping[Atom, Truth]

    def __getitem__(self, atom: Atom) -> Truth:
        return self.values[atom]

    def holds(self, literal: QLiteral) -> bool:
        truth = self.values.get(literal.atom, Truth.FALSE)
        if literal.kind is LiteralKind.PLAIN:
            return truth is Truth.TRUE
        if literal.kind is LiteralKind.NOT:
            return truth is Truth.FALSE
        return truth is Truth.UNDEFINED

    def atoms_with(self, truth: Truth) -> FrozenSet[Atom]:
        return frozenset(atom for atom, value in self.values.items() if value is truth)


@dataclass(frozen=True, slots=True)
class CGInterpretation:
    """A causal-graph stable model: atoms mapped to negation-free values."""

    values: Mapping[Atom, CausalValue]
    atoms: FrozenSet[Atom]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "values",
            {atom: value for atom, value in self.values.items() if not value.is_zero},
        )

    def __getitem__(self, atom: Atom) -> CausalValue:
        return self.values.get(atom, ZERO)

    @property
    def support(self) -> FrozenSet[Atom]:
        return frozenset(self.values)

    def items(self) -> List[Tuple[Atom, CausalValue]]:
        return sorted(self.values.items())

    def justifications(self, atom: Atom) -> Iterator[Justification]:
        return iter(self[atom].sorted_addends())

    def __hash__(self) -> int:
        return hash((frozenset(self.values.items()), self.atoms))

