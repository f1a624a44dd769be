"""Boolean provenance algebra over Blake canonical forms.

A value is kept as the set of all its prime implicants, obtained from any
DNF by dropping contradictory conjunctions, absorbing supersets and closing
under consensus. Two values are the same Boolean function exactly when
their forms are equal.
"""
from __future__ import annotations

import logging
from collections import deque
from functools import reduce
from typing import Iterable, List, Optional, Set

import sympy
from sympy.logic.inference import satisfiable

from config import settings
from models.provenance import Conjunction, ProvenanceValue, ProvLiteral

from .errors import ResourceLimitError

logger = logging.getLogger(__name__)

FALSE = ProvenanceValue(frozenset())
TRUE = ProvenanceValue(frozenset({frozenset()}))


def _is_contradictory(conjunction: Conjunction) -> bool:
    return any(literal.negated() in conjunction for literal in conjunction if literal.positive)


def _consensus(first: Conjunction, second: Conjunction) -> Optional[Conjunction]:
    clashes = [literal for literal in first if literal.negated() in second]
    if len(clashes) != 1:
        return None
    (clash,) = clashes
    return (first | second) - {clash, clash.negated()}


def _absorb(conjunctions: Iterable[Conjunction]) -> Set[Conjunction]:
    kept: List[Conjunction] = []
    for conjunction in sorted(set(conjunctions), key=len):
        if not any(other <= conjunction for other in kept):
            kept.append(conjunction)
    return set(kept)


def blake(conjunctions: Iterable[Conjunction]) -> ProvenanceValue:
    """Blake canonical form of the disjunction of ``conjunctions``."""
    limit = settings.MAX_ADDENDS
    current = _absorb(c for c in conjunctions if not _is_contradictory(c))
    queue = deque(sorted(current, key=lambda c: (len(c), sorted(c))))
    while queue:
        conjunction = queue.popleft()
        if conjunction not in current:
            continue
        for other in sorted(current, key=lambda c: (len(c), sorted(c))):
            if conjunction not in current:
                break
            resolvent = _consensus(conjunction, other)
            if resolvent is None or any(kept <= resolvent for kept in current):
                continue
            current = {kept for kept in current if not resolvent <= kept}
            current.add(resolvent)
            queue.append(resolvent)
            if len(current) > limit:
                logger.warning("Prime implicant limit reached: %d (limit %d)", len(current), limit)
                raise ResourceLimitError("prime implicant", limit, len(current))
    return ProvenanceValue(frozenset(current))


def literal(base: str, positive: bool = True) -> ProvenanceValue:
    return ProvenanceValue(frozenset({frozenset({ProvLiteral(base, positive)})}))


def conjunction_value(conjunction: Conjunction) -> ProvenanceValue:
    return blake([conjunction])


def disjoin(left: ProvenanceValue, right: ProvenanceValue) -> ProvenanceValue:
    return blake(left.conjunctions | right.conjunctions)


def conjoin(left: ProvenanceValue, right: ProvenanceValue) -> ProvenanceValue:
    if left.is_false or right.is_false:
        return FALSE
    return blake(first | second for first in left.conjunctions for second in right.conjunctions)


def negate(value: ProvenanceValue) -> ProvenanceValue:
    """De Morgan: the conjunction over implicants of their negated literals."""
    clauses = (
        blake(frozenset({item.negated()}) for item in conjunction)
        for conjunction in value.sorted_conjunctions()
    )
    return reduce(conjoin, clauses, TRUE)


def disjoin_all(values: Iterable[ProvenanceValue]) -> ProvenanceValue:
    return blake(conjunction for value in values for conjunction in value.conjunctions)


def conjoin_all(values: Iterable[ProvenanceValue]) -> ProvenanceValue:
    return reduce(conjoin, values, TRUE)


def implies(conjunction: Conjunction, value: ProvenanceValue) -> bool:
    """A conjunction entails a Blake form iff it contains one of its implicants."""
    if _is_contradictory(conjunction):
        return True
    return any(implicant <= conjunction for implicant in value.conjunctions)


def assign(value: ProvenanceValue, base: str, truth: bool) -> ProvenanceValue:
    """Substitute a constant for one variable."""
    conjunctions = []
    for conjunction in value.conjunctions:
        if ProvLiteral(base, not truth) in conjunction:
            continue
        conjunctions.append(conjunction - {ProvLiteral(base, truth)})
    return blake(conjunctions)


def to_sympy(value: ProvenanceValue) -> sympy.Basic:
    def atom(item: ProvLiteral) -> sympy.Basic:
        symbol = sympy.Symbol(item.base)
        return symbol if item.positive else sympy.Not(symbol)

    return sympy.Or(*(
        sympy.And(*(atom(item) for item in sorted(conjunction)))
        for conjunction in value.sorted_conjunctions()
    ))


def equivalent(left: ProvenanceValue, right: ProvenanceValue) -> bool:
    """Boolean equivalence, decided by sympy independently of the Blake forms."""
    return not satisfiable(sympy.Xor(to_sympy(left), to_sympy(right)))
