"""Parser service for labelled logic programs."""
from __future__ import annotations

import logging
from collections import defaultdict
from typing import Dict, List, Optional

import lark
from lark.exceptions import UnexpectedInput, UnexpectedToken, VisitError

from config import settings
from models.program import Diagnostic, LabelledProgram, Rule
from models.provenance import MARKER_PREFIX
from models.terms import NAME_PATTERN, ElementaryTerm, is_valid_name

from .errors import DuplicateLabelError, ProgramSyntaxError, ReservedTokenError

logger = logging.getLogger(__name__)

NOT_KEYWORD = "not"

PROGRAM_GRAMMAR = rf"""
    start: statement*

    statement: NAME ":" NAME _ARROW body "."   -> labelled_rule
             | NAME ":" NAME "."               -> labelled_fact
             | NAME _ARROW body "."            -> rule
             | NAME "."                        -> fact

    body: literal ("," literal)*
    literal: NOT NAME   -> negative
           | NAME       -> positive

    NOT: "not"
    _ARROW: ":-" | "<-"
    NAME: /{NAME_PATTERN}/
    COMMENT: /%[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


def is_reserved(name: str) -> bool:
    return name == NOT_KEYWORD or name.startswith(MARKER_PREFIX)


def _checked(token: lark.Token) -> str:
    name = str(token)
    if is_reserved(name):
        raise ReservedTokenError(
            f"Reserved name '{name}' cannot be used as an atom or label",
            token.line,
            token.column,
        )
    return name


class _ProgramBuilder(lark.Transformer):
    def start(self, rules):
        return list(rules)

    def labelled_rule(self, children):
        label, head, (positive, negative) = children
        return Rule(ElementaryTerm(_checked(label)), _checked(head), positive, negative)

    def labelled_fact(self, children):
        label, head = children
        return Rule(ElementaryTerm(_checked(label)), _checked(head))

    def rule(self, children):
        head, (positive, negative) = children
        return Rule(None, _checked(head), positive, negative)

    def fact(self, children):
        (head,) = children
        name = _checked(head)
        # `A.` stands for `A: A <-`
        return Rule(ElementaryTerm(name), name)

    def body(self, literals):
        positive = tuple(name for polarity, name in literals if polarity)
        negative = tuple(name for polarity, name in literals if not polarity)
        return positive, negative

    def positive(self, children):
        return True, _checked(children[0])

    def negative(self, children):
        return False, _checked(children[1])


class ProgramParser:
    """Reentrant parser from program text to ``LabelledProgram``."""

    _lark = lark.Lark(PROGRAM_GRAMMAR, parser="lalr")

    def __init__(self, allow_shared_labels: Optional[bool] = None) -> None:
        if allow_shared_labels is None:
            allow_shared_labels = settings.ALLOW_SHARED_LABELS
        self.allow_shared_labels = allow_shared_labels

    def parse(self, text: str) -> LabelledProgram:
        try:
            tree = self._lark.parse(text)
            rules = _ProgramBuilder().transform(tree)
        except VisitError as exc:
            if isinstance(exc.orig_exc, ProgramSyntaxError):
                raise exc.orig_exc from None
            raise
        except UnexpectedToken as exc:
            token = exc.token
            if token.type == "NOT" or str(token) == NOT_KEYWORD:
                raise ReservedTokenError(
                    "Keyword 'not' cannot be used as an atom or label", exc.line, exc.column
                ) from exc
            raise ProgramSyntaxError(f"Unexpected token {str(token)!r}", exc.line, exc.column) from exc
        except UnexpectedInput as exc:
            raise ProgramSyntaxError("Unexpected input", exc.line, exc.column) from exc

        program = LabelledProgram(tuple(rules))
        duplicates = {} if self.allow_shared_labels else shared_labels(program)
        if duplicates:
            label = min(duplicates)
            raise DuplicateLabelError(label, duplicates[label])
        logger.debug(
            "Parsed program: %d rules, %d atoms, %d labels",
            len(program.rules),
            len(program.atoms),
            len(program.labels),
        )
        return program


def parse_program(text: str, allow_shared_labels: Optional[bool] = None) -> LabelledProgram:
    return ProgramParser(allow_shared_labels).parse(text)


def shared_labels(program: LabelledProgram) -> Dict[str, List[int]]:
    """Labels carried by more than one rule, with the rule indexes."""
    positions: Dict[str, List[int]] = defaultdict(list)
    for index, rule in enumerate(program.rules):
        if rule.label is not None:
            positions[rule.label.base].append(index)
    return {label: indexes for label, indexes in positions.items() if len(indexes) > 1}


def desugar(program: LabelledProgram) -> LabelledProgram:
    """Give every unlabelled fact its homonymous label."""
    return LabelledProgram(tuple(
        Rule(ElementaryTerm(rule.head), rule.head) if rule.is_fact and rule.label is None else rule
        for rule in program.rules
    ))


def validate(program: LabelledProgram, allow_shared_labels: Optional[bool] = None) -> List[Diagnostic]:
    if allow_shared_labels is None:
        allow_shared_labels = settings.ALLOW_SHARED_LABELS
    diagnostics: List[Diagnostic] = []

    for index, rule in enumerate(program.rules):
        names = [rule.head, *rule.negative_body]
        names.extend(element for element in rule.positive_body if isinstance(element, str))
        if rule.label is not None:
            names.append(rule.label.base)
        for name in names:
            if is_reserved(name):
                diagnostics.append(Diagnostic("reserved-name", f"'{name}' is reserved", index))
            elif not is_valid_name(name):
                diagnostics.append(Diagnostic("invalid-name", f"'{name}' is not a valid name", index))
        if any(not isinstance(element, str) for element in rule.positive_body):
            diagnostics.append(Diagnostic("value-in-body", "body holds a value constant", index))

    if not allow_shared_labels:
        for label, indexes in sorted(shared_labels(program).items()):
            positions = ", ".join(str(index + 1) for index in indexes)
            diagnostics.append(Diagnostic(
                "duplicate-label", f"label '{label}' is shared by rules {positions}", indexes[-1]
            ))
    return diagnostics


def format_rule(rule: Rule) -> str:
    if any(not isinstance(element, str) for element in rule.positive_body):
        raise ValueError("Rules holding value constants have no surface syntax")
    literals = [*rule.positive_body, *(f"{NOT_KEYWORD} {atom}" for atom in rule.negative_body)]
    if rule.is_fact and rule.label is not None and rule.label.base == rule.head:
        return f"{rule.head}."
    head = rule.head if rule.label is None else f"{rule.label.base}: {rule.head}"
    if not literals:
        return f"{head}."
    return f"{head} :- {', '.join(literals)}."


def format_program(program: LabelledProgram) -> str:
    """Surface text that parses back to ``program``."""
    return "".join(f"{format_rule(rule)}\n" for rule in program.rules)
