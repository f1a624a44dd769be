"""Causal-graph projection and CG stable models."""
from __future__ import annotations

import logging
from itertools import combinations
from typing import List

from config import settings
from models.graph import CausalGraphView
from models.interpretation import CGInterpretation, Truth
from models.justification import Justification
from models.program import LabelledProgram, Rule
from models.terms import ElementaryTerm
from models.value import CausalValue

from . import algebra
from .algebra import Substitution
from .errors import ArityError, ResourceLimitError, UnknownAtomError
from .wfs import least_model, standard_wfm

logger = logging.getLogger(__name__)


def _drop_negations(vertex: ElementaryTerm) -> Substitution:
    if vertex.sign == 2:
        return Substitution.ONE
    if vertex.sign == 1:
        return Substitution.ZERO
    return Substitution.KEEP


def lambda_c(value: CausalValue) -> CausalValue:
    """Enablers become 1, inhibitors 0, productive causes stay."""
    return algebra.substitute(value, _drop_negations)


def graph_of_justification(graph: Justification) -> CausalGraphView:
    if any(vertex.sign for vertex in graph.vertices):
        raise ValueError(f"Justification {graph} is not negation-free")
    return CausalGraphView(
        frozenset(vertex.base for vertex in graph.vertices),
        frozenset((a.base, b.base) for a, b in graph.edges),
    )


def graph_of_term(value: CausalValue) -> CausalGraphView:
    if len(value) != 1:
        raise ArityError(f"Expected a single justification, got {len(value)} addends")
    return graph_of_justification(next(iter(value.addends)))


def term_of_graph(graph: CausalGraphView) -> CausalValue:
    """Product of ``a . b`` over the edges of ``graph``."""
    return algebra.prod_all(
        algebra.app(algebra.value_of(ElementaryTerm(a)), algebra.value_of(ElementaryTerm(b)))
        for a, b in sorted(graph.edges)
    )


def cg_reduct(program: LabelledProgram, support: frozenset) -> LabelledProgram:
    """Drop rules whose ``not C`` fails under ``support``; erase the rest."""
    return LabelledProgram(tuple(
        Rule(rule.label, rule.head, rule.positive_body)
        for rule in program.rules
        if not any(atom in support for atom in rule.negative_body)
    ))


def cg_stable_models(program: LabelledProgram) -> List[CGInterpretation]:
    """Every support ``S`` whose reduct has a least model with support ``S``.

    Stable supports lie between the true and the possibly-true atoms of the
    well-founded model, so only the undefined atoms are enumerated.
    """
    well_founded = standard_wfm(program)
    certain = well_founded.atoms_with(Truth.TRUE)
    undecided = sorted(well_founded.atoms_with(Truth.UNDEFINED))
    limit = settings.MAX_ATOMS_ENUM
    if len(undecided) > limit:
        logger.warning(
            "Too many undefined atoms to enumerate: %d (limit %d)", len(undecided), limit
        )
        raise ResourceLimitError("atom enumeration", limit, len(undecided))

    models: List[CGInterpretation] = []
    candidates = 0
    for size in range(len(undecided) + 1):
        for chosen in combinations(undecided, size):
            candidates += 1
            support = certain | frozenset(chosen)
            model = least_model(cg_reduct(program, support))
            if model.support == support:
                models.append(CGInterpretation(model.values, program.atoms))
    logger.info("CG stable models: %d found among %d candidates", len(models), candidates)
    return sorted(models, key=lambda model: sorted(model.support))


def cg_justifications(model: CGInterpretation, atom: str) -> List[CausalGraphView]:
    if atom not in model.atoms:
        raise UnknownAtomError(atom)
    return [graph_of_justification(graph) for graph in model[atom].sorted_addends()]
