"""Why-not provenance.

The augmented program adds a hypothetical fact ``~not(A): A`` for every
atom that is not a fact. Provenance of a query literal is the Boolean
image of its causal value in the augmented program. ``why`` computes it
with an alternating fixpoint over Boolean interpretations, ``why_causal``
through the causal model.
"""
from __future__ import annotations

import logging
from typing import Dict, FrozenSet, Iterable, List, Tuple, Union

from config import settings
from models.interpretation import LiteralKind, QLiteral
from models.justification import Justification
from models.program import LabelledProgram, Rule
from models.provenance import Conjunction, ProvenanceValue, ProvLiteral, is_marker, marker, marker_atom
from models.terms import ElementaryTerm
from models.value import CausalValue

from . import algebra, provenance
from .errors import ResourceLimitError, UnknownAtomError
from .wfs import causal_wfm, query

logger = logging.getLogger(__name__)

ProvInterpretation = Dict[str, ProvenanceValue]


def flatten(graph: Justification) -> Conjunction:
    """Conjunction of a justification: ``.`` becomes ``&``, ``~~l`` becomes ``l``."""
    return frozenset(ProvLiteral(vertex.base, vertex.sign != 1) for vertex in graph.vertices)


def lambda_p(value: CausalValue) -> ProvenanceValue:
    return provenance.blake(flatten(graph) for graph in value.addends)


def augment(program: LabelledProgram) -> LabelledProgram:
    facts = program.facts
    added = tuple(
        Rule(ElementaryTerm(marker(atom), 1), atom)
        for atom in sorted(program.atoms)
        if atom not in facts
    )
    logger.debug("Augmented program with %d hypothetical facts", len(added))
    return LabelledProgram(program.rules + added)


def why(program: LabelledProgram, literal: QLiteral) -> ProvenanceValue:
    """Provenance of ``literal``.

    ``lambda_p`` commutes with the operators of the well-founded fixpoint,
    so the alternating fixpoint runs on Boolean values directly; causal
    values of the augmented program grow exponentially along inertia chains.
    """
    if literal.atom not in program.atoms:
        raise UnknownAtomError(literal.atom)
    return _query(*_boolean_wfm(augment(program).rules), literal)


def why_causal(program: LabelledProgram, literal: QLiteral) -> ProvenanceValue:
    """Provenance read off the causal model of the augmented program."""
    if literal.atom not in program.atoms:
        raise UnknownAtomError(literal.atom)
    return lambda_p(query(causal_wfm(augment(program)), literal))


# Boolean fixpoint

def _label_value(rule: Rule) -> ProvenanceValue:
    if rule.label is None:
        return provenance.TRUE
    return provenance.literal(rule.label.base, rule.label.sign != 1)


def _boolean_gamma(
    rules: Tuple[Rule, ...],
    assumed: ProvInterpretation,
) -> ProvInterpretation:
    """Least model over Boolean values of the reduct by ``assumed``."""
    negations: Dict[str, ProvenanceValue] = {}

    def negated(atom: str) -> ProvenanceValue:
        if atom not in negations:
            negations[atom] = provenance.negate(assumed.get(atom, provenance.FALSE))
        return negations[atom]

    def positive(element: Union[str, CausalValue]) -> ProvenanceValue:
        if isinstance(element, str):
            return current.get(element, provenance.FALSE)
        return lambda_p(element)

    current: ProvInterpretation = {}
    steps = 0
    while True:
        steps += 1
        following: ProvInterpretation = {}
        for rule in rules:
            factors = [positive(element) for element in rule.positive_body]
            factors.extend(negated(atom) for atom in rule.negative_body)
            factors.append(_label_value(rule))
            body = provenance.conjoin_all(factors)
            if body.is_false:
                continue
            following[rule.head] = provenance.disjoin(following.get(rule.head, provenance.FALSE), body)
        if following == current:
            logger.debug("Boolean least model reached after %d steps", steps)
            return current
        current = following


def _boolean_wfm(rules: Tuple[Rule, ...]) -> Tuple[ProvInterpretation, ProvInterpretation]:
    lower: ProvInterpretation = {}
    while True:
        upper = _boolean_gamma(rules, lower)
        following = _boolean_gamma(rules, upper)
        if following == lower:
            return lower, upper
        lower = following


def _query(lower: ProvInterpretation, upper: ProvInterpretation, literal: QLiteral) -> ProvenanceValue:
    holds = lower.get(literal.atom, provenance.FALSE)
    possible = upper.get(literal.atom, provenance.FALSE)
    if literal.kind is LiteralKind.PLAIN:
        return holds
    if literal.kind is LiteralKind.NOT:
        return provenance.negate(possible)
    return provenance.conjoin(provenance.negate(holds), possible)


def why_oracle(program: LabelledProgram, literal: QLiteral) -> ProvenanceValue:
    """``why`` restricted to small programs without value constants, the
    reference the causal route is compared against."""
    if literal.atom not in program.atoms:
        raise UnknownAtomError(literal.atom)
    limit = settings.MAX_ATOMS_ENUM
    if len(program.atoms) > limit:
        logger.warning("Too many atoms for the provenance oracle: %d (limit %d)", len(program.atoms), limit)
        raise ResourceLimitError("atom enumeration", limit, len(program.atoms))
    if any(not isinstance(element, str) for rule in program.rules for element in rule.positive_body):
        raise ValueError("The provenance oracle needs a program without value constants")
    return _query(*_boolean_wfm(augment(program).rules), literal)


# justifications and program modifications

def classify_hypothetical(conjunction: Conjunction) -> bool:
    """True when some ``not(A)`` marker occurs negated."""
    return any(item.is_marker and not item.positive for item in conjunction)


def is_enabled(conjunction: Conjunction) -> bool:
    """No negated rule label; negated markers are hypothetical, not inhibitors."""
    return not any(not item.positive and not item.is_marker for item in conjunction)


def non_hypothetical(value: ProvenanceValue) -> List[Conjunction]:
    return [c for c in value.sorted_conjunctions() if not classify_hypothetical(c)]


def markers_of(value: Union[CausalValue, ProvenanceValue]) -> List[str]:
    if isinstance(value, ProvenanceValue):
        return sorted(label for label in value.variables if is_marker(label))
    labels = {vertex.base for graph in value.addends for vertex in graph.vertices}
    return sorted(label for label in labels if is_marker(label))


def strip_not_markers(value: Union[CausalValue, ProvenanceValue]) -> Union[CausalValue, ProvenanceValue]:
    """Remove every ``not(A)`` label: ``~~not(A)`` becomes 1, ``~not(A)`` becomes 0."""
    if isinstance(value, ProvenanceValue):
        for label in markers_of(value):
            value = provenance.assign(value, label, True)
        return value
    for label in markers_of(value):
        value = algebra.remove_elementary(ElementaryTerm(label), value)
    return value


def strip_conjunction(conjunction: Conjunction) -> Conjunction:
    """``strip_not_markers`` on a single non-hypothetical conjunction."""
    return frozenset(item for item in conjunction if not item.is_marker)


def modification_sets(
    conjunction: Conjunction,
) -> Tuple[FrozenSet[str], FrozenSet[str], FrozenSet[str], FrozenSet[str]]:
    """``(remove, keep, add_facts, no_facts)`` read off a conjunction."""
    remove = frozenset(i.base for i in conjunction if not i.positive and not i.is_marker)
    keep = frozenset(i.base for i in conjunction if i.positive and not i.is_marker)
    add_facts = frozenset(marker_atom(i.base) for i in conjunction if not i.positive and i.is_marker)
    no_facts = frozenset(marker_atom(i.base) for i in conjunction if i.positive and i.is_marker)
    return remove, keep, add_facts, no_facts


def apply_modification(
    program: LabelledProgram,
    remove: Iterable[str],
    add_facts: Iterable[str],
) -> LabelledProgram:
    return program.without_labels(remove).with_facts(add_facts)
