"""Causal value algebra: sum, product, application, negation and order.

Values are kept in a canonical form: a set of pairwise incomparable
justifications (closed graphs over elementary terms). Every operation
rebuilds its result through ``_canonical_sum``, and two values are equal
exactly when their canonical forms are.

Graph invariants maintained by ``_close_graph``:

* a label never occurs with an odd and an even sign in the same graph
  (``t * ~t = 0``), such graphs are dropped;
* negated vertices (``~l``, ``~~l``) are conditions: they take part in no
  edge other than their reflexive one, so ``~l.t = ~l * t``;
* ``~~l`` next to ``l`` is dropped (``l <= ~~l``);
* edges between plain labels are reflexively and transitively closed.

Sums are closed under consensus: an addend holding ``~l`` and another
holding ``~~l`` produce their union without both, which makes
``~t + ~~t = 1`` hold. Saturating a sum this way and keeping the maximal
addends gives every value a single canonical form.
"""
from __future__ import annotations

import enum
import logging
from collections import deque
from functools import reduce
from typing import Callable, Iterable, Iterator, List, Set

import networkx as nx

from config import settings
from models.justification import Edge, Justification, JustificationClass
from models.terms import App, CausalTerm, ElementaryTerm, LabelTerm, Neg, Product, Sum
from models.value import ONE, ZERO, CausalValue

from .errors import ResourceLimitError

logger = logging.getLogger(__name__)


class Substitution(enum.Enum):
    """What an elementary occurrence is replaced by."""

    KEEP = "keep"
    ONE = "one"
    ZERO = "zero"


# graphs

def _close_graph(vertices: Iterable[ElementaryTerm], arcs: Iterable[Edge]) -> Justification | None:
    """Build a canonical graph, or ``None`` when the product is 0."""
    vertex_set = set(vertices)

    odd_bases = {vertex.base for vertex in vertex_set if vertex.sign == 1}
    if odd_bases and any(vertex.sign != 1 and vertex.base in odd_bases for vertex in vertex_set):
        return None

    plain_bases = {vertex.base for vertex in vertex_set if vertex.sign == 0}
    vertex_set = {vertex for vertex in vertex_set if not (vertex.sign == 2 and vertex.base in plain_bases)}

    digraph = nx.DiGraph()
    digraph.add_nodes_from(vertex for vertex in vertex_set if vertex.sign == 0)
    digraph.add_edges_from(
        (source, target)
        for source, target in arcs
        if source.sign == 0 and target.sign == 0 and source in digraph and target in digraph
    )
    edges: Set[Edge] = set(nx.transitive_closure(digraph, reflexive=True).edges())
    edges.update((vertex, vertex) for vertex in vertex_set if vertex.sign)
    return Justification(frozenset(vertex_set), frozenset(edges))


def _delete_vertices(graph: Justification, removed: Set[ElementaryTerm]) -> Justification:
    """Drop vertices while keeping the edges the closure routed through them."""
    return Justification(
        frozenset(vertex for vertex in graph.vertices if vertex not in removed),
        frozenset((a, b) for a, b in graph.edges if a not in removed and b not in removed),
    )


def _lower_vertices(vertex: ElementaryTerm) -> Iterator[ElementaryTerm]:
    yield vertex
    if vertex.sign == 2:
        # l <= ~~l
        yield ElementaryTerm(vertex.base, 0)


def graph_leq(lower: Justification, upper: Justification) -> bool:
    """``lower <= upper``: every edge of ``upper`` is covered by one of ``lower``."""
    if upper.is_empty:
        return True
    lower_edges = lower.edges
    for source, target in upper.edges:
        if not any(
            (a, b) in lower_edges
            for a in _lower_vertices(source)
            for b in _lower_vertices(target)
        ):
            return False
    return True


def _check_limit(observed: int) -> None:
    limit = settings.MAX_ADDENDS
    if observed > limit:
        logger.warning("Addend limit reached: %d addends (limit %d)", observed, limit)
        raise ResourceLimitError("addend", limit, observed)


def _maximal(graphs: Iterable[Justification]) -> Set[Justification]:
    kept: List[Justification] = []
    # sparse graphs first: they are the likely absorbers
    for graph in sorted(set(graphs), key=lambda g: (len(g.edges), g.sort_key)):
        if any(graph_leq(graph, other) for other in kept):
            continue
        kept = [other for other in kept if not graph_leq(other, graph)]
        kept.append(graph)
    return set(kept)


def _resolvents(first: Justification, second: Justification) -> Iterator[Justification]:
    for left, right in ((first, second), (second, first)):
        for base in sorted(left.labels(1) & right.labels(2)):
            resolvent = _consensus(left, right, base)
            if resolvent is not None:
                yield resolvent


def _consensus(left: Justification, right: Justification, base: str) -> Justification | None:
    # pivots are conditions, so no edge runs through them
    pivots = {ElementaryTerm(base, 1), ElementaryTerm(base, 2)}
    return _close_graph((left.vertices | right.vertices) - pivots, left.edges | right.edges)


def _canonical_sum(graphs: Iterable[Justification]) -> CausalValue:
    current = _maximal(graphs)
    _check_limit(len(current))
    queue = deque(sorted(current, key=lambda g: g.sort_key))
    while queue:
        graph = queue.popleft()
        if graph not in current:
            continue
        for other in sorted(current, key=lambda g: g.sort_key):
            if graph not in current:
                break
            if other is graph or other not in current:
                continue
            for resolvent in _resolvents(graph, other):
                if any(graph_leq(resolvent, kept) for kept in current):
                    continue
                current = {kept for kept in current if not graph_leq(kept, resolvent)}
                current.add(resolvent)
                queue.append(resolvent)
                _check_limit(len(current))
    return CausalValue(frozenset(current))


# operations

def value_of(term: ElementaryTerm) -> CausalValue:
    return CausalValue.of(term)


def from_graphs(graphs: Iterable[Justification]) -> CausalValue:
    """Canonical value of a sum of (already closed) graphs."""
    return _canonical_sum(graphs)


def add(left: CausalValue, right: CausalValue) -> CausalValue:
    """Sum (least upper bound)."""
    if left.is_zero:
        return right
    if right.is_zero or left == right:
        return left
    return _canonical_sum(left.addends | right.addends)


def prod(left: CausalValue, right: CausalValue) -> CausalValue:
    """Product (greatest lower bound)."""
    if left.is_zero or right.is_zero:
        return ZERO
    if left.is_one:
        return right
    if right.is_one:
        return left
    graphs = []
    for first in left.addends:
        for second in right.addends:
            graph = _close_graph(first.vertices | second.vertices, first.edges | second.edges)
            if graph is not None:
                graphs.append(graph)
    return _canonical_sum(graphs)


def app(left: CausalValue, right: CausalValue) -> CausalValue:
    """Application ``left . right``."""
    if left.is_zero or right.is_zero:
        return ZERO
    if left.is_one:
        return right
    if right.is_one:
        return left
    graphs = []
    for first in left.addends:
        for second in right.addends:
            arcs = set(first.edges | second.edges)
            arcs.update((a, b) for a in first.vertices for b in second.vertices)
            graph = _close_graph(first.vertices | second.vertices, arcs)
            if graph is not None:
                graphs.append(graph)
    return _canonical_sum(graphs)


def neg(value: CausalValue) -> CausalValue:
    """Negation: ``~(G1 + ... + Gn) = ~G1 * ... * ~Gn`` with ``~G`` the sum of
    its negated vertices."""
    result = ONE
    for graph in value.sorted_addends():
        negated = _canonical_sum(Justification.single(vertex.negate()) for vertex in graph.vertices)
        result = prod(result, negated)
        if result.is_zero:
            break
    return result


def leq(left: CausalValue, right: CausalValue) -> bool:
    """Every addend of ``left`` lies below an addend of ``right``; complete
    because canonical sums hold all their consensus addends."""
    return all(any(graph_leq(graph, other) for other in right.addends) for graph in left.addends)


def equivalent(left: CausalValue, right: CausalValue) -> bool:
    return left == right or (leq(left, right) and leq(right, left))


def addends(value: CausalValue) -> List[Justification]:
    return value.sorted_addends()


def as_value(graph: Justification) -> CausalValue:
    return CausalValue(frozenset({graph}))


def classify(graph: Justification) -> JustificationClass:
    return JustificationClass(
        causes=graph.labels(0),
        enablers=graph.labels(2),
        inhibitors=graph.labels(1),
    )


def is_enabled(graph: Justification) -> bool:
    return not graph.labels(1)


def enabled_addends(value: CausalValue) -> List[Justification]:
    return [graph for graph in value.sorted_addends() if is_enabled(graph)]


def substitute(
    value: CausalValue,
    replacement: Callable[[ElementaryTerm], Substitution],
) -> CausalValue:
    """Replace elementary occurrences by 1 or 0 and re-canonicalize."""
    graphs = []
    for graph in value.addends:
        removed: Set[ElementaryTerm] = set()
        killed = False
        for vertex in graph.vertices:
            action = replacement(vertex)
            if action is Substitution.ZERO:
                killed = True
                break
            if action is Substitution.ONE:
                removed.add(vertex)
        if killed:
            continue
        graphs.append(_delete_vertices(graph, removed) if removed else graph)
    return _canonical_sum(graphs)


def remove_elementary(removed: ElementaryTerm, value: CausalValue) -> CausalValue:
    """Occurrences ``t`` with ``~~t = ~~x`` become 1, occurrences of ``~x`` become 0."""
    target = removed.double_negation()
    complement = removed.negate()

    def replacement(vertex: ElementaryTerm) -> Substitution:
        if vertex.double_negation() == target:
            return Substitution.ONE
        if vertex == complement:
            return Substitution.ZERO
        return Substitution.KEEP

    return substitute(value, replacement)


def normalize(term: CausalTerm) -> CausalValue:
    if isinstance(term, LabelTerm):
        return value_of(ElementaryTerm(term.name, 0))
    if isinstance(term, Product):
        return reduce(prod, (normalize(factor) for factor in term.factors), ONE)
    if isinstance(term, Sum):
        return reduce(add, (normalize(addend) for addend in term.addends), ZERO)
    if isinstance(term, App):
        return app(normalize(term.left), normalize(term.right))
    if isinstance(term, Neg):
        return neg(normalize(term.operand))
    raise TypeError(f"Not a causal term: {term!r}")


def prod_all(values: Iterable[CausalValue]) -> CausalValue:
    return reduce(prod, values, ONE)
