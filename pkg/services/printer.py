"""Text rendering of causal values.

Addends are printed through their transitive reduction. When every vertex
of the reduction has at most one successor the graph is a forest of
in-trees and prints as nested applications, ``(a * b.c).d``; other graphs
print as a product of their reduction edges. Cyclic graphs have no
reduction and print their closure edges. Negated vertices carry no edges and
print as trailing factors, ``d.r1 * ~~h``. The output always parses back to
an equivalent value.
"""
from __future__ import annotations

from typing import List

import networkx as nx

from models.justification import Justification
from models.terms import ElementaryTerm
from models.value import CausalValue


def format_elementary(vertex: ElementaryTerm) -> str:
    return "~" * vertex.sign + vertex.base


def to_digraph(graph: Justification) -> nx.DiGraph:
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.vertices)
    digraph.add_edges_from(graph.arcs)
    return digraph


def reduction(graph: Justification) -> nx.DiGraph:
    digraph = to_digraph(graph)
    if nx.is_directed_acyclic_graph(digraph):
        return nx.transitive_reduction(digraph)
    return digraph


def _render_tree(reduced: nx.DiGraph, vertex: ElementaryTerm) -> str:
    predecessors = sorted(reduced.predecessors(vertex))
    name = format_elementary(vertex)
    if not predecessors:
        return name
    if len(predecessors) == 1:
        return f"{_render_tree(reduced, predecessors[0])}.{name}"
    inner = " * ".join(_render_tree(reduced, predecessor) for predecessor in predecessors)
    return f"({inner}).{name}"


def format_justification(graph: Justification) -> str:
    if graph.is_empty:
        return "1"
    reduced = reduction(graph)
    is_forest = nx.is_directed_acyclic_graph(reduced) and all(
        degree <= 1 for _, degree in reduced.out_degree()
    )
    if is_forest:
        roots = sorted(
            (vertex for vertex, degree in reduced.out_degree() if degree == 0),
            key=lambda vertex: (vertex.sign > 0, vertex),
        )
        return " * ".join(_render_tree(reduced, root) for root in roots)

    parts: List[str] = [
        f"{format_elementary(a)}.{format_elementary(b)}" for a, b in sorted(reduced.edges())
    ]
    parts.extend(
        format_elementary(vertex)
        for vertex in sorted(reduced.nodes(), key=lambda vertex: (vertex.sign > 0, vertex))
        if reduced.degree(vertex) == 0
    )
    return " * ".join(parts)


def format_value(value: CausalValue) -> str:
    if value.is_zero:
        return "0"
    return " + ".join(format_justification(graph) for graph in value.sorted_addends())

