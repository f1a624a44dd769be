"""
Tests for the labelled program parser and validator
"""
from __future__ import annotations

import pytest

from models.program import Diagnostic, LabelledProgram, Rule
from models.terms import ElementaryTerm
from services.errors import DuplicateLabelError, ProgramSyntaxError, ReservedTokenError
from services.program_parser import (
    ProgramParser,
    desugar,
    format_program,
    format_rule,
    parse_program,
    shared_labels,
    validate,
)
from services.term_parser import parse_value
from tests.conftest import load_corpus
from tests.programs import random_program, shooting, throwers


class TestParseProgram:
    """Surface syntax to LabelledProgram"""

    def test_bond_program(self, bond_program):
        """Labelled rules and facts of the bond program"""
        assert bond_program.rules == (
            Rule(ElementaryTerm("r1"), "p", ("d",), ("a",)),
            Rule(ElementaryTerm("r2"), "a", (), ("h",)),
            Rule(ElementaryTerm("d"), "d"),
            Rule(ElementaryTerm("h"), "h"),
        )
        assert bond_program.atoms == {"p", "a", "d", "h"}
        assert bond_program.labels == {"r1", "r2", "d", "h"}
        assert bond_program.facts == {"d", "h"}

    def test_empty_program(self):
        program = parse_program("")
        assert program.rules == ()
        assert program.atoms == frozenset()
        assert len(program) == 0

    def test_comment_only_program(self):
        assert parse_program("% nothing here\n").rules == ()

    def test_unlabelled_rule(self):
        (rule,) = parse_program("p :- q.").rules
        assert rule.label is None
        assert rule.positive_body == ("q",)

    def test_labelled_fact(self):
        (rule,) = parse_program("r: p.").rules
        assert rule.label == ElementaryTerm("r")
        assert rule.is_fact

    def test_arrow_spelling(self):
        assert parse_program("r: p <- q, not s.") == parse_program("r: p :- q, not s.")

    def test_strong_negation_and_arguments(self):
        (rule,) = parse_program("s_1: shattered_1 :- throw(suzy)_0, not -shattered_0.").rules
        assert rule.positive_body == ("throw(suzy)_0",)
        assert rule.negative_body == ("-shattered_0",)

    def test_hyphen_inside_names(self):
        program = parse_program("r1: p :- dead-1.\ndead-1.")
        assert program.rules[0].positive_body == ("dead-1",)
        assert "dead-1" in program.facts
        assert parse_program("r1: p :- not -dead-1.").rules[0].negative_body == ("-dead-1",)

    def test_corpus_matches_generator(self, shooting_program):
        assert set(shooting_program.rules) == set(shooting().rules)

    def test_throwers_corpus_matches_generator(self, throwers_program):
        assert set(throwers_program.rules) == set(throwers().rules)


class TestParseErrors:
    """Rejected inputs"""

    def test_not_as_head(self):
        with pytest.raises(ReservedTokenError):
            parse_program("not :- a.")

    def test_not_as_fact(self):
        with pytest.raises(ReservedTokenError):
            parse_program("a.\nnot.")

    def test_double_not(self):
        with pytest.raises(ReservedTokenError):
            parse_program("p :- not not.")

    def test_marker_spelling(self):
        with pytest.raises(ReservedTokenError) as exc_info:
            parse_program("p :- not(a).")
        assert exc_info.value.line == 1

    def test_missing_period_reports_position(self):
        with pytest.raises(ProgramSyntaxError) as exc_info:
            parse_program("a.\nr1: p :- a\nq.")
        assert exc_info.value.line == 3
        assert "line 3" in str(exc_info.value)

    def test_unexpected_character(self):
        with pytest.raises(ProgramSyntaxError) as exc_info:
            parse_program("p :- a; b.")
        assert exc_info.value.line == 1
        assert exc_info.value.column is not None

    def test_duplicate_labels_rejected(self):
        with pytest.raises(DuplicateLabelError) as exc_info:
            parse_program("r1: a.\nr1: b :- a.\nr2: c.")
        assert exc_info.value.label == "r1"
        assert exc_info.value.rule_indexes == (0, 1)

    def test_fact_label_clashes_with_rule_label(self):
        with pytest.raises(DuplicateLabelError):
            parse_program("a: b :- c.\na.")

    def test_shared_labels_allowed(self, throwers_program):
        assert shared_labels(throwers_program) == {"s_1": [0, 1], "s_2": [4, 5]}

    def test_parser_follows_settings(self, monkeypatch):
        monkeypatch.setenv("ECJ_ALLOW_SHARED_LABELS", "true")
        from config import settings

        settings.reload()
        assert ProgramParser().allow_shared_labels is True
        assert len(parse_program("r: a.\nr: b.")) == 2


class TestValidate:
    def test_clean_program(self, bond_program):
        assert validate(bond_program) == []

    def test_duplicate_label_diagnostic(self):
        program = parse_program("r1: a.\nr1: b :- a.", allow_shared_labels=True)
        (diagnostic,) = validate(program)
        assert diagnostic.code == "duplicate-label"
        assert diagnostic.rule_index == 1
        assert str(diagnostic).startswith("duplicate-label: rule 2:")
        assert validate(program, allow_shared_labels=True) == []

    def test_reserved_and_invalid_names(self):
        program = LabelledProgram((
            Rule(ElementaryTerm("r1"), "not(p)"),
            Rule(None, "q", ("bad name",)),
        ))
        codes = [(item.code, item.rule_index) for item in validate(program)]
        assert codes == [("reserved-name", 0), ("invalid-name", 1)]

    def test_value_constant_in_body(self):
        program = LabelledProgram((Rule(ElementaryTerm("r1"), "p", (parse_value("a"),)),))
        assert validate(program) == [Diagnostic("value-in-body", "body holds a value constant", 0)]


class TestProgramStructure:
    def test_desugar_labels_unlabelled_facts(self):
        program = LabelledProgram((Rule(None, "a"), Rule(None, "b", ("a",))))
        desugared = desugar(program)
        assert desugared.rules[0] == Rule(ElementaryTerm("a"), "a")
        assert desugared.rules[1].label is None
        assert desugar(desugared) == desugared

    def test_without_labels(self, bond_program):
        program = bond_program.without_labels({"h"})
        assert "h" not in program.facts
        assert len(program) == 3

    def test_with_facts_skips_existing(self, bond_program):
        program = bond_program.with_facts({"h", "a"})
        assert len(program) == 5
        assert program.rules[-1] == Rule(ElementaryTerm("a"), "a")

    def test_stratification(self, bond_program, cycle_program, counterexample_program):
        assert bond_program.is_stratified
        assert not cycle_program.is_stratified
        assert not counterexample_program.is_stratified

    def test_dependency_graph_tags_negation(self, bond_program):
        graph = bond_program.dependency_graph()
        assert graph.edges["d", "p"]["negative"] is False
        assert graph.edges["a", "p"]["negative"] is True


class TestFormat:
    @pytest.mark.parametrize(
        "text",
        ["d.", "r: h.", "h :- a, not b.", "r: h :- a, not b.", "r: h :- not b."],
    )
    def test_rule_surface(self, text):
        (rule,) = parse_program(text).rules
        assert format_rule(rule) == text

    def test_corpus_round_trip(self):
        for name in ("bond", "counterexample", "railway", "enabler_chain"):
            program = load_corpus(name)
            assert parse_program(format_program(program)) == program

    def test_random_round_trip(self, rng):
        for _ in range(50):
            program = random_program(rng)
            assert parse_program(format_program(program)) == program

    def test_value_constants_have_no_syntax(self):
        with pytest.raises(ValueError):
            format_rule(Rule(None, "p", (parse_value("a"),)))
