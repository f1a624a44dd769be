"""Labelled logic programs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx

from .terms import ElementaryTerm, Label
from .value import CausalValue

Atom = str
BodyElement = Union[Atom, CausalValue]


@dataclass(frozen=True, slots=True)
class Rule:
    """``label: head <- positive_body, not negative_body``.

    ``label`` is ``None`` for unlabelled rules, which carry the identity 1.
    Positive body elements are atoms, or value constants in reducts.
    """

    label: ElementaryTerm | None
    head: Atom
    positive_body: Tuple[BodyElement, ...] = ()
    negative_body: Tuple[Atom, ...] = ()

    def __post_init__(self) -> None:
        if not self.head:
            raise ValueError("Rule head must not be empty")
        if not isinstance(self.positive_body, tuple):
            object.__setattr__(self, "positive_body", tuple(self.positive_body))
        if not isinstance(self.negative_body, tuple):
            object.__setattr__(self, "negative_body", tuple(self.negative_body))

    @property
    def is_fact(self) -> bool:
        return not self.positive_body and not self.negative_body

    @property
    def is_positive(self) -> bool:
        return not self.negative_body

    def body_atoms(self) -> Tuple[Atom, ...]:
        positive = tuple(element for element in self.positive_body if isinstance(element, str))
        return positive + self.negative_body


@dataclass(frozen=True, slots=True)
class LabelledProgram:
    rules: Tuple[Rule, ...] = ()
    atoms: FrozenSet[Atom] = field(init=False)
    labels: FrozenSet[Label] = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.rules, tuple):
            object.__setattr__(self, "rules", tuple(self.rules))
        atoms = set()
        labels = set()
        for rule in self.rules:
            atoms.add(rule.head)
            atoms.update(rule.body_atoms())
            if rule.label is not None:
                labels.add(rule.label.base)
        object.__setattr__(self, "atoms", frozenset(atoms))
        object.__setattr__(self, "labels", frozenset(labels))

    @property
    def facts(self) -> FrozenSet[Atom]:
        return frozenset(rule.head for rule in self.rules if rule.is_fact)

    @property
    def is_positive(self) -> bool:
        return all(rule.is_positive for rule in self.rules)

    def without_labels(self, labels: Iterable[Label]) -> "LabelledProgram":
        """Program minus every rule carrying one of ``labels``."""
        dropped = set(labels)
        return LabelledProgram(tuple(
            rule for rule in self.rules
            if rule.label is None or rule.label.base not in dropped
        ))

    def with_facts(self, atoms: Iterable[Atom]) -> "LabelledProgram":
        """Program plus a fact ``(A: A <-)`` for each new atom."""
        existing = self.facts
        added = tuple(
            Rule(label=ElementaryTerm(atom, 0), head=atom)
            for atom in sorted(set(atoms))
            if atom not in existing
        )
        return LabelledProgram(self.rules + added)

    def dependency_graph(self) -> nx.DiGraph:
        """Atom dependencies; edges run body -> head, tagged ``negative``."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.atoms)
        for rule in self.rules:
            for atom in rule.positive_body:
                if isinstance(atom, str) and not graph.has_edge(atom, rule.head):
                    graph.add_edge(atom, rule.head, negative=False)
            for atom in rule.negative_body:
                graph.add_edge(atom, rule.head, negative=True)
        return graph

    @property
    def is_stratified(self) -> bool:
        """No negative dependency inside a strongly connected component."""
        graph = self.dependency_graph()
        component_of = {}
        for index, component in enumerate(nx.strongly_connected_components(graph)):
            for atom in component:
                component_of[atom] = index
        return not any(
            data["negative"] and component_of[source] == component_of[target]
            for source, target, data in graph.edges(data=True)
        )

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True, slots=True)
class Diagnostic:
    code: str
    message: str
    rule_index: int | None = None

    def __str__(self) -> str:
        if self.rule_index is None:
            return f"{self.code}: {self.message}"
        return f"{self.code}: rule {self.rule_index + 1}: {self.message}"
