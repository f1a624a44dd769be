"""Causal well-founded semantics.

The causal model is computed by iterating the squared reduct operator from
the bottom interpretation; its greatest fixpoint is one more application of
the operator to the least one. ``standard_wfm`` is a separate Boolean
alternating fixpoint that shares no code with the algebra.
"""
from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Set, Tuple

from models.interpretation import (
    CausalWfm,
    Interpretation,
    LiteralKind,
    QLiteral,
    ThreeValuedModel,
    Truth,
)
from models.program import LabelledProgram, Rule
from models.terms import is_valid_name
from models.value import ONE, ZERO, CausalValue

from . import algebra
from .errors import ProgramSyntaxError, UnknownAtomError

logger = logging.getLogger(__name__)


def parse_literal(text: str) -> QLiteral:
    """``p``, ``not p`` or ``undef p``."""
    parts = text.split()
    if len(parts) == 1:
        kind, atom = LiteralKind.PLAIN, parts[0]
    elif len(parts) == 2 and parts[0] in (LiteralKind.NOT.value, LiteralKind.UNDEF.value):
        kind, atom = LiteralKind(parts[0]), parts[1]
    else:
        raise ProgramSyntaxError(f"Invalid literal: {text!r}")
    if not is_valid_name(atom) or atom in (LiteralKind.NOT.value, LiteralKind.UNDEF.value):
        raise ProgramSyntaxError(f"Invalid atom in literal: {text!r}")
    return QLiteral(atom, kind)


def reduct(program: LabelledProgram, interpretation: Interpretation) -> LabelledProgram:
    """Replace every ``not C`` by the constant ``~I(C)``."""
    rules = []
    for rule in program.rules:
        if rule.is_positive:
            rules.append(rule)
            continue
        constants = []
        for atom in rule.negative_body:
            value = algebra.neg(interpretation[atom])
            if not value.is_one:
                constants.append(value)
        rules.append(Rule(rule.label, rule.head, rule.positive_body + tuple(constants)))
    return LabelledProgram(tuple(rules))


def _body_value(rule: Rule, interpretation: Interpretation) -> CausalValue:
    value = ONE
    for element in rule.positive_body:
        factor = interpretation[element] if isinstance(element, str) else element
        value = algebra.prod(value, factor)
        if value.is_zero:
            break
    return value


def direct_consequences(program: LabelledProgram, interpretation: Interpretation) -> Interpretation:
    """One application of the direct-consequence operator of a positive program."""
    if not program.is_positive:
        raise ValueError("Direct consequences need a positive program")
    heads: Dict[str, CausalValue] = {}
    for rule in program.rules:
        body = _body_value(rule, interpretation)
        if body.is_zero:
            continue
        label = ONE if rule.label is None else algebra.value_of(rule.label)
        heads[rule.head] = algebra.add(heads.get(rule.head, ZERO), algebra.app(body, label))
    return Interpretation(heads)


def least_model_with_steps(program: LabelledProgram) -> Tuple[Interpretation, int]:
    """Least model of a positive program and the number of steps that grew it."""
    current = Interpretation.bottom()
    steps = 0
    while True:
        following = direct_consequences(program, current)
        # the operator is monotone from bottom, so no growth means a fixpoint
        if following.leq(current):
            logger.debug("Least model reached after %d steps", steps)
            return current, steps
        current = following
        steps += 1


def least_model(program: LabelledProgram) -> Interpretation:
    return least_model_with_steps(program)[0]


def gamma(program: LabelledProgram, interpretation: Interpretation) -> Interpretation:
    """Least model of the reduct of ``program`` by ``interpretation``."""
    return least_model(reduct(program, interpretation))


def causal_wfm(program: LabelledProgram) -> CausalWfm:
    lower = Interpretation.bottom()
    iterations = 0
    while True:
        iterations += 1
        upper = gamma(program, lower)
        following = gamma(program, upper)
        changed = sum(1 for atom in program.atoms if following[atom] != lower[atom])
        logger.debug("Alternating fixpoint iteration %d: %d atoms changed", iterations, changed)
        if following.leq(lower):
            break
        lower = following
    logger.info(
        "Causal well-founded model computed in %d iterations over %d atoms",
        iterations,
        len(program.atoms),
    )
    return CausalWfm(lfp=lower, gfp=upper, atoms=program.atoms, iterations=iterations)


def query(model: CausalWfm, literal: QLiteral) -> CausalValue:
    if literal.atom not in model.atoms:
        raise UnknownAtomError(literal.atom)
    if literal.kind is LiteralKind.PLAIN:
        return model.lfp[literal.atom]
    if literal.kind is LiteralKind.NOT:
        return algebra.neg(model.gfp[literal.atom])
    holds = query(model, QLiteral(literal.atom))
    fails = query(model, QLiteral(literal.atom, LiteralKind.NOT))
    return algebra.prod(algebra.neg(holds), algebra.neg(fails))


def query_all(model: CausalWfm) -> List[Tuple[QLiteral, CausalValue]]:
    """Values of every q-literal, atoms in order."""
    return [
        (literal, query(model, literal))
        for atom in sorted(model.atoms)
        for literal in (QLiteral(atom, kind) for kind in LiteralKind)
    ]


# standard well-founded model

def _boolean_least_model(program: LabelledProgram, assumed: FrozenSet[str]) -> FrozenSet[str]:
    """Least model of the program with ``not C`` read as ``C not in assumed``."""
    rules = [
        rule for rule in program.rules
        if not any(atom in assumed for atom in rule.negative_body)
        and not any(not isinstance(element, str) and element.is_zero for element in rule.positive_body)
    ]
    derived: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for rule in rules:
            if rule.head in derived:
                continue
            if all(element in derived for element in rule.positive_body if isinstance(element, str)):
                derived.add(rule.head)
                changed = True
    return frozenset(derived)


def standard_wfm(program: LabelledProgram) -> ThreeValuedModel:
    """Well-founded model of the unlabelled program (alternating fixpoint)."""
    true_atoms: FrozenSet[str] = frozenset()
    while True:
        possible = _boolean_least_model(program, true_atoms)
        following = _boolean_least_model(program, possible)
        if following == true_atoms:
            break
        true_atoms = following
    values = {}
    for atom in program.atoms:
        if atom in true_atoms:
            values[atom] = Truth.TRUE
        elif atom in possible:
            values[atom] = Truth.UNDEFINED
        else:
            values[atom] = Truth.FALSE
    return ThreeValuedModel(values)
