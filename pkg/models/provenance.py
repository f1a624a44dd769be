"""Boolean provenance values."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List

MARKER_PREFIX = "not("


def marker(atom: str) -> str:
    """Label of the hypothetical fact for ``atom``: ``not(atom)``."""
    return f"{MARKER_PREFIX}{atom})"


def is_marker(label: str) -> bool:
    return label.startswith(MARKER_PREFIX) and label.endswith(")")


def marker_atom(label: str) -> str:
    return label[len(MARKER_PREFIX):-1]


@dataclass(frozen=True, slots=True, order=True)
class ProvLiteral:
    base: str
    positive: bool = True

    def negated(self) -> "ProvLiteral":
        return ProvLiteral(self.base, not self.positive)

    @property
    def is_marker(self) -> bool:
        return is_marker(self.base)

    def __str__(self) -> str:
        return self.base if self.positive else f"-{self.base}"


Conjunction = FrozenSet[ProvLiteral]


def format_conjunction(conjunction: Conjunction) -> str:
    if not conjunction:
        return "true"
    return " & ".join(str(literal) for literal in sorted(conjunction))


@dataclass(frozen=True, slots=True)
class ProvenanceValue:
    """A Boolean function in Blake canonical form (all prime implicants).

    Built by ``services.provenance``; equal functions have equal forms.
    """

    conjunctions: FrozenSet[Conjunction]

    @property
    def is_false(self) -> bool:
        return not self.conjunctions

    @property
    def is_true(self) -> bool:
        return frozenset() in self.conjunctions

    @property
    def variables(self) -> FrozenSet[str]:
        return frozenset(literal.base for conjunction in self.conjunctions for literal in conjunction)

    def sorted_conjunctions(self) -> List[Conjunction]:
        return sorted(self.conjunctions, key=lambda conjunction: (len(conjunction), sorted(conjunction)))

    def __len__(self) -> int:
        return len(self.conjunctions)

    def __str__(self) -> str:
        if self.is_false:
            return "false"
        return " | ".join(format_conjunction(conjunction) for conjunction in self.sorted_conjunctions())
