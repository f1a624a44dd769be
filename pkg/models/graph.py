"""Causal graphs over rule labels."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

import networkx as nx

from .terms import Label

LabelEdge = Tuple[Label, Label]


@dataclass(frozen=True, slots=True)
class CausalGraphView:
    """Reflexively and transitively closed edge set over labels."""

    vertices: FrozenSet[Label]
    edges: FrozenSet[LabelEdge]

    @classmethod
    def closed(cls, vertices: Iterable[Label], edges: Iterable[LabelEdge]) -> "CausalGraphView":
        digraph = nx.DiGraph()
        digraph.add_nodes_from(vertices)
        digraph.add_edges_from(edge for edge in edges if edge[0] != edge[1])
        closure = nx.transitive_closure(digraph, reflexive=False)
        closed_edges = set(closure.edges())
        closed_edges.update((vertex, vertex) for vertex in digraph.nodes)
        return cls(frozenset(digraph.nodes), frozenset(closed_edges))

    @property
    def arcs(self) -> FrozenSet[LabelEdge]:
        return frozenset((a, b) for a, b in self.edges if a != b)

    def to_digraph(self) -> nx.DiGraph:
        digraph = nx.DiGraph()
        digraph.add_nodes_from(self.vertices)
        digraph.add_edges_from(self.arcs)
        return digraph

    def reduction(self) -> nx.DiGraph:
        """Transitive reduction for display; cyclic graphs keep their closure."""
        digraph = self.to_digraph()
        if nx.is_directed_acyclic_graph(digraph):
            return nx.transitive_reduction(digraph)
        return digraph

    def __len__(self) -> int:
        return len(self.vertices)
