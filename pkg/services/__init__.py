"""Engine services: algebra, parsers, fixpoints and projections."""
from .algebra import add, app, classify, leq, neg, normalize, prod, remove_elementary
from .cg import cg_justifications, cg_stable_models, lambda_c
from .program_parser import parse_program, validate
from .term_parser import parse_term, parse_value
from .wfs import causal_wfm, parse_literal, query, standard_wfm
from .wnp import augment, lambda_p, why

__all__ = [
    "add",
    "app",
    "augment",
    "causal_wfm",
    "cg_justifications",
    "cg_stable_models",
    "classify",
    "lambda_c",
    "lambda_p",
    "leq",
    "neg",
    "normalize",
    "parse_literal",
    "parse_program",
    "parse_term",
    "parse_value",
    "prod",
    "query",
    "remove_elementary",
    "standard_wfm",
    "validate",
    "why",
]
