"""Parser for causal terms (``~``, ``*``, ``+``, ``.``/``·``, parentheses)."""
from __future__ import annotations

import logging
from functools import reduce

import lark
from lark.exceptions import LarkError, UnexpectedInput, VisitError

from models.terms import NAME_PATTERN, App, CausalTerm, LabelTerm, Neg, ONE_TERM, Product, Sum, ZERO_TERM
from models.value import CausalValue

from .errors import TermSyntaxError

logger = logging.getLogger(__name__)

# application binds tighter than product, product tighter than sum
TERM_GRAMMAR = rf"""
    ?start: sum
    ?sum: prod ("+" prod)*
    ?prod: app ("*" app)*
    ?app: unary (_DOT unary)*
    ?unary: neg | atom
    neg: "~" unary
    ?atom: label
         | zero
         | one
         | "(" sum ")"
    label: LABEL
    zero: "0"
    one: "1"

    _DOT: "." | "·"
    LABEL: /{NAME_PATTERN}/

    %import common.WS
    %ignore WS
"""


class _TermBuilder(lark.Transformer):
    def sum(self, children):
        return Sum(tuple(children))

    def prod(self, children):
        return Product(tuple(children))

    def app(self, children):
        return reduce(App, children)

    def neg(self, children):
        return Neg(children[0])

    def label(self, children):
        return LabelTerm(str(children[0]))

    def zero(self, _children):
        return ZERO_TERM

    def one(self, _children):
        return ONE_TERM


_parser = lark.Lark(TERM_GRAMMAR, parser="lalr")
_builder = _TermBuilder()


def parse_term(text: str) -> CausalTerm:
    try:
        tree = _parser.parse(text)
        return _builder.transform(tree)
    except UnexpectedInput as exc:
        raise TermSyntaxError(
            f"Invalid causal term at line {exc.line}, column {exc.column}: {text!r}"
        ) from exc
    except (LarkError, VisitError) as exc:
        raise TermSyntaxError(f"Invalid causal term: {text!r}") from exc


def parse_value(text: str) -> CausalValue:
    """Parse and normalize a causal term."""
    from .algebra import normalize

    return normalize(parse_term(text))
