"""Justifications: closed graphs over elementary terms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from .terms import ElementaryTerm, Label

Edge = Tuple[ElementaryTerm, ElementaryTerm]


@dataclass(frozen=True, slots=True)
class Justification:
    """One addend of a causal value.

    Vertices are elementary terms. ``edges`` holds the reflexive and
    transitive closure over plain labels, reflexive pairs included;
    negated vertices only carry their reflexive pair. Instances are built by the
    algebra service, which keeps them annihilation-free and absorbed.
    """

    vertices: FrozenSet[ElementaryTerm]
    edges: FrozenSet[Edge]
    sort_key: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        vertex_key = tuple(sorted((v.base, v.sign) for v in self.vertices))
        arc_key = tuple(sorted(
            ((a.base, a.sign), (b.base, b.sign)) for a, b in self.edges if a != b
        ))
        object.__setattr__(self, "sort_key", (len(vertex_key), vertex_key, arc_key))

    @classmethod
    def empty(cls) -> "Justification":
        return cls(frozenset(), frozenset())

    @classmethod
    def single(cls, vertex: ElementaryTerm) -> "Justification":
        return cls(frozenset({vertex}), frozenset({(vertex, vertex)}))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def arcs(self) -> FrozenSet[Edge]:
        """Non-reflexive edges."""
        return frozenset((a, b) for a, b in self.edges if a != b)

    def labels(self, sign: int | None = None) -> FrozenSet[Label]:
        return frozenset(
            vertex.base for vertex in self.vertices if sign is None or vertex.sign == sign
        )

    def __str__(self) -> str:
        from services.printer import format_justification

        return format_justification(self)


@dataclass(frozen=True, slots=True)
class JustificationClass:
    """Labels of a justification split by negation depth."""

    causes: FrozenSet[Label]
    enablers: FrozenSet[Label]
    inhibitors: FrozenSet[Label]
    enabled: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "enabled", not self.inhibitors)
