"""GraphViz DOT export of causal graphs and CG models."""
from __future__ import annotations

from typing import List

from models.graph import CausalGraphView
from models.interpretation import CGInterpretation

from .cg import cg_justifications


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _graph_lines(graph: CausalGraphView, indent: str, prefix: str = "") -> List[str]:
    reduced = graph.reduction()
    lines = [
        f"{indent}{_quote(prefix + vertex)} [label={_quote(vertex)}];"
        if prefix else f"{indent}{_quote(vertex)};"
        for vertex in sorted(reduced.nodes())
    ]
    lines.extend(
        f"{indent}{_quote(prefix + source)} -> {_quote(prefix + target)};"
        for source, target in sorted(reduced.edges())
    )
    return lines


def to_dot(graph: CausalGraphView, name: str = "G") -> str:
    """DOT digraph of the transitive reduction of ``graph``."""
    lines = [f"digraph {name} {{"]
    lines.extend(_graph_lines(graph, "  "))
    lines.append("}")
    return "\n".join(lines)


def model_to_dot(model: CGInterpretation, name: str = "G") -> str:
    """One cluster per atom and justification; node ids are prefixed to stay apart."""
    lines = [f"digraph {name} {{"]
    for atom in sorted(model.atoms):
        for index, graph in enumerate(cg_justifications(model, atom)):
            cluster = f"{atom}#{index}"
            lines.append(f"  subgraph {_quote('cluster_' + cluster)} {{")
            lines.append(f"    label={_quote(atom)};")
            lines.extend(_graph_lines(graph, "    ", prefix=f"{cluster}/"))
            lines.append("  }")
    lines.append("}")
    return "\n".join(lines)
