"""Models package initialization"""
from .graph import CausalGraphView
from .interpretation import (
    CausalWfm,
    CGInterpretation,
    Interpretation,
    LiteralKind,
    QLiteral,
    ThreeValuedModel,
    Truth,
)
from .justification import Justification, JustificationClass
from .program import Diagnostic, LabelledProgram, Rule
from .provenance import ProvenanceValue, ProvLiteral
from .terms import ElementaryTerm
from .value import ONE, ZERO, CausalValue

__all__ = [
    "CausalGraphView",
    "CausalValue",
    "CausalWfm",
    "CGInterpretation",
    "Diagnostic",
    "ElementaryTerm",
    "Interpretation",
    "Justification",
    "JustificationClass",
    "LabelledProgram",
    "LiteralKind",
    "ONE",
    "ProvenanceValue",
    "ProvLiteral",
    "QLiteral",
    "Rule",
    "ThreeValuedModel",
    "Truth",
    "ZERO",
]
