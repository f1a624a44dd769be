"""Machine-readable records for CLI output."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from models.graph import CausalGraphView
from models.interpretation import CausalWfm, CGInterpretation, QLiteral
from models.justification import Justification
from models.program import Diagnostic
from models.provenance import ProvenanceValue, format_conjunction
from models.value import CausalValue

from .algebra import classify
from .printer import format_elementary, format_justification, format_value
from .wnp import classify_hypothetical

SCHEMA_VERSION = 1


@dataclass(frozen=True, slots=True)
class AddendRecord:
    term: str
    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str], ...]
    causes: Tuple[str, ...]
    enablers: Tuple[str, ...]
    inhibitors: Tuple[str, ...]
    enabled: bool

    @classmethod
    def of(cls, graph: Justification) -> "AddendRecord":
        kind = classify(graph)
        return cls(
            term=format_justification(graph),
            vertices=tuple(format_elementary(vertex) for vertex in sorted(graph.vertices)),
            edges=tuple(
                (format_elementary(a), format_elementary(b)) for a, b in sorted(graph.arcs)
            ),
            causes=tuple(sorted(kind.causes)),
            enablers=tuple(sorted(kind.enablers)),
            inhibitors=tuple(sorted(kind.inhibitors)),
            enabled=kind.enabled,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "term": self.term,
            "vertices": list(self.vertices),
            "edges": [list(edge) for edge in self.edges],
            "causes": list(self.causes),
            "enablers": list(self.enablers),
            "inhibitors": list(self.inhibitors),
            "enabled": self.enabled,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AddendRecord":
        return cls(
            term=data["term"],
            vertices=tuple(data["vertices"]),
            edges=tuple((a, b) for a, b in data["edges"]),
            causes=tuple(data["causes"]),
            enablers=tuple(data["enablers"]),
            inhibitors=tuple(data["inhibitors"]),
            enabled=data["enabled"],
        )


@dataclass(frozen=True, slots=True)
class OutputRecord:
    """Value of one query literal with its classified addends."""

    literal: str
    value: str
    addends: Tuple[AddendRecord, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, literal: QLiteral, value: CausalValue) -> "OutputRecord":
        return cls(
            literal=str(literal),
            value=format_value(value),
            addends=tuple(AddendRecord.of(graph) for graph in value.sorted_addends()),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "literal": self.literal,
            "value": self.value,
            "addends": [addend.to_dict() for addend in self.addends],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "OutputRecord":
        return cls(
            literal=data["literal"],
            value=data["value"],
            addends=tuple(AddendRecord.from_dict(item) for item in data["addends"]),
        )


def provenance_record(literal: QLiteral, value: ProvenanceValue) -> Dict[str, Any]:
    return {
        "literal": str(literal),
        "provenance": str(value),
        "conjunctions": [
            {
                "text": format_conjunction(conjunction),
                "literals": [str(item) for item in sorted(conjunction)],
                "hypothetical": classify_hypothetical(conjunction),
            }
            for conjunction in value.sorted_conjunctions()
        ],
    }


def wfm_records(model: CausalWfm) -> List[Dict[str, Any]]:
    return [
        {
            "atom": atom,
            "lfp": format_value(model.lfp[atom]),
            "gfp": format_value(model.gfp[atom]),
        }
        for atom in sorted(model.atoms)
    ]


def graph_record(graph: CausalGraphView) -> Dict[str, Any]:
    reduced = graph.reduction()
    return {
        "vertices": sorted(graph.vertices),
        "edges": [list(edge) for edge in sorted(reduced.edges())],
    }


def model_record(index: int, model: CGInterpretation) -> Dict[str, Any]:
    return {
        "model": index,
        "values": {atom: format_value(model[atom]) for atom in sorted(model.atoms)},
    }


def justifications_record(atom: str, graphs: Sequence[CausalGraphView]) -> Dict[str, Any]:
    return {"atom": atom, "graphs": [graph_record(graph) for graph in graphs]}


def diagnostic_record(diagnostic: Diagnostic) -> Dict[str, Any]:
    rule = None if diagnostic.rule_index is None else diagnostic.rule_index + 1
    return {"code": diagnostic.code, "message": diagnostic.message, "rule": rule}


def document(command: str, records: Sequence[Dict[str, Any]]) -> Dict[str, Any]:
    return {"version": SCHEMA_VERSION, "command": command, "records": list(records)}
