"""Canonical causal values."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterator, List

from .justification import Justification
from .terms import ElementaryTerm


@dataclass(frozen=True, slots=True)
class CausalValue:
    """An antichain of justifications.

    The empty set is 0 and the single empty graph is 1. Values are only
    meant to be built by ``services.algebra``, which keeps them canonical,
    so structural equality is value equality.
    """

    addends: FrozenSet[Justification]

    @classmethod
    def of(cls, term: ElementaryTerm) -> "CausalValue":
        return cls(frozenset({Justification.single(term)}))

    @property
    def is_zero(self) -> bool:
        return not self.addends

    @property
    def is_one(self) -> bool:
        return len(self.addends) == 1 and next(iter(self.addends)).is_empty

    def sorted_addends(self) -> List[Justification]:
        return sorted(self.addends, key=lambda addend: addend.sort_key)

    def __iter__(self) -> Iterator[Justification]:
        return iter(self.sorted_addends())

    def __len__(self) -> int:
        return len(self.addends)

    # Operator sugar over services.algebra: + sum, * product, @ application,
    # ~ negation, <= order.
    def __add__(self, other: "CausalValue") -> "CausalValue":
        from services import algebra

        return algebra.add(self, other)

    def __mul__(self, other: "CausalValue") -> "CausalValue":
        from services import algebra

        return algebra.prod(self, other)

    def __matmul__(self, other: "CausalValue") -> "CausalValue":
        from services import algebra

        return algebra.app(self, other)

    def __invert__(self) -> "CausalValue":
        from services import algebra

        return algebra.neg(self)

    def __le__(self, other: "CausalValue") -> bool:
        from services import algebra

        return algebra.leq(self, other)

    def __str__(self) -> str:
        from services.printer import format_value

        return format_value(self)


ZERO = CausalValue(frozenset())
ONE = CausalValue(frozenset({Justification.empty()}))
