"""
Tests for the causal well-founded model
"""
from __future__ import annotations

import pytest

from models.interpretation import Interpretation, LiteralKind, QLiteral, Truth
from models.program import LabelledProgram, Rule
from models.terms import ElementaryTerm
from models.value import ZERO
from services import algebra
from services.errors import ProgramSyntaxError, UnknownAtomError
from services.program_parser import parse_program
from services.term_parser import parse_value as v
from services.wfs import (
    causal_wfm,
    direct_consequences,
    gamma,
    least_model,
    least_model_with_steps,
    parse_literal,
    query,
    query_all,
    reduct,
    standard_wfm,
)
from tests.conftest import load_corpus
from tests.programs import random_program

PLAIN, NOT, UNDEF = LiteralKind.PLAIN, LiteralKind.NOT, LiteralKind.UNDEF


def value_of(program: LabelledProgram, atom: str, kind: LiteralKind = PLAIN):
    return query(causal_wfm(program), QLiteral(atom, kind))


class TestParseLiteral:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("a", QLiteral("a")),
            ("not a", QLiteral("a", NOT)),
            ("undef  dead_9", QLiteral("dead_9", UNDEF)),
            ("not -switch", QLiteral("-switch", NOT)),
        ],
    )
    def test_valid(self, text, expected):
        literal = parse_literal(text)
        assert literal == expected
        assert str(literal) == " ".join(text.split())

    @pytest.mark.parametrize("text", ["", "not", "a b", "maybe a", "undef not", "not a b"])
    def test_invalid(self, text):
        with pytest.raises(ProgramSyntaxError):
            parse_literal(text)


class TestOperators:
    """Reduct, direct consequences and the least model"""

    def test_reduct_by_bottom_drops_unit_constants(self, bond_program):
        reduced = reduct(bond_program, Interpretation.bottom())
        assert reduced.is_positive
        assert reduced.rules[0].positive_body == ("d",)
        assert reduced.rules[1].positive_body == ()

    def test_reduct_by_least_fixpoint(self, bond_program):
        lfp = causal_wfm(bond_program).lfp
        reduced = reduct(bond_program, lfp)
        assert reduced.rules[0].positive_body == ("d", v("~~h + ~r2"))
        assert reduced.rules[1].positive_body == (v("~h"),)

    def test_positive_program_unchanged(self):
        program = parse_program("r: p :- q.\nq.")
        assert reduct(program, Interpretation.bottom()) == program

    def test_direct_consequences_of_facts(self, bond_program):
        facts = LabelledProgram(tuple(rule for rule in bond_program.rules if rule.is_fact))
        step = direct_consequences(facts, Interpretation.bottom())
        assert step.items() == [("d", v("d")), ("h", v("h"))]

    def test_direct_consequences_need_positive_program(self, bond_program):
        with pytest.raises(ValueError):
            direct_consequences(bond_program, Interpretation.bottom())

    def test_zero_body_derives_nothing(self):
        program = parse_program("r: p :- q.")
        assert least_model(program) == Interpretation.bottom()

    def test_least_model_of_empty_program(self):
        assert least_model(LabelledProgram()) == Interpretation.bottom()

    def test_least_model_of_chain(self):
        program = parse_program("a.\nr1: b :- a.\nr2: c :- b.")
        assert least_model(program)["c"] == v("a.r1.r2")
        assert least_model_with_steps(program) == (least_model(program), 3)

    def test_gamma_on_cycle(self, cycle_program):
        first = gamma(cycle_program, Interpretation.bottom())
        assert first.items() == [("a", v("r1")), ("b", v("r2"))]
        second = gamma(cycle_program, first)
        assert second["a"] == v("~r2.r1")
        assert second["b"] == v("~r1.r2")

    def test_gamma_by_top_falsifies_negations(self, bond_program):
        result = gamma(bond_program, Interpretation.top(bond_program.atoms))
        assert result.support == {"d", "h"}

    def test_gamma_is_antimonotonic(self, cycle_program):
        bottom = Interpretation.bottom()
        upper = gamma(cycle_program, bottom)
        assert bottom.leq(upper)
        assert gamma(cycle_program, upper).leq(gamma(cycle_program, bottom))


class TestCorpusValues:
    """Values of the example programs"""

    def test_bond(self, bond_program):
        model = causal_wfm(bond_program)
        assert model.lfp["p"] == v("(~~h * d).r1 + (~r2 * d).r1")
        assert model.lfp["a"] == v("~h.r2")
        assert model.lfp["d"] == v("d")
        assert model.lfp["h"] == v("h")
        assert model.lfp == model.gfp
        assert query(model, QLiteral("a", NOT)) == v("~~h + ~r2")

    def test_cycle(self, cycle_program):
        model = causal_wfm(cycle_program)
        assert model.lfp["a"] == v("~r2.r1")
        assert model.gfp["a"] == v("r1")
        assert query(model, QLiteral("a", NOT)) == v("~r1")
        assert query(model, QLiteral("a", UNDEF)) == v("~~r2 * ~~r1")

    def test_bond_without_h(self):
        assert value_of(load_corpus("bond_without_h"), "a") == v("r2")

    def test_shooting(self, shooting_program):
        assert value_of(shooting_program, "dead_9") == v("(~water_3 * shoot_8 * load_1.l_2).d_9")

    def test_shooting_without_water(self, shooting_program, shooting_dry_program):
        dry = value_of(shooting_dry_program, "dead_9")
        assert dry == v("(shoot_8 * load_1.l_2).d_9")
        wet = value_of(shooting_program, "dead_9")
        assert algebra.remove_elementary(ElementaryTerm("water_3", 1), wet) == dry

    def test_fact_not_a(self):
        assert value_of(load_corpus("fact_not_a"), "s") == v("~~r2.r3 + ~d.r3 + ~r1.r3")

    def test_fact_not_a_without_d(self):
        assert value_of(load_corpus("fact_not_a_without_d"), "s") == v("r3")

    def test_enabler_chain(self):
        assert value_of(load_corpus("enabler_chain"), "p") == v("(a * ~~r3).r1 + (a * ~r2).r1 + (a * ~c).r1")

    def test_throwers(self, throwers_program):
        assert value_of(throwers_program, "shattered_2") == v(
            "throw(suzy)_0.s_1 + (~throw(suzy)_0 * throw(billy)_1).s_2 + (~s_1 * throw(billy)_1).s_2"
        )

    def test_railway(self):
        value = value_of(load_corpus("railway"), "arrival")
        assert value == v("(train * ~~switch).r3.r1 + (train * ~switch).r4.r2")
        # the two tracks resolve into a third addend
        assert len(value) == 3

    def test_railway_classical(self):
        assert value_of(load_corpus("railway_classical"), "arrival") == v("(train * ~~switch).r3.r1")

    def test_railway_shared_labels(self):
        program = load_corpus("railway_shared", allow_shared_labels=True)
        assert value_of(program, "arrival") == v("train.r3.r1")

    def test_empty_program(self):
        model = causal_wfm(LabelledProgram())
        assert model.atoms == frozenset()
        assert query_all(model) == []


class TestQuery:
    def test_unknown_atom(self, bond_program):
        with pytest.raises(UnknownAtomError):
            query(causal_wfm(bond_program), QLiteral("zz"))

    def test_query_all_covers_every_literal(self, cycle_program):
        results = query_all(causal_wfm(cycle_program))
        assert [str(literal) for literal, _ in results] == ["a", "not a", "undef a", "b", "not b", "undef b"]

    def test_false_atom_has_zero_value(self, bond_program):
        model = causal_wfm(bond_program)
        assert model.lfp["zz"] == ZERO


class TestStandardWfm:
    def test_bond(self, bond_program):
        model = standard_wfm(bond_program)
        assert model.atoms_with(Truth.TRUE) == {"p", "d", "h"}
        assert model["a"] is Truth.FALSE

    def test_cycle(self, cycle_program):
        model = standard_wfm(cycle_program)
        assert model.atoms_with(Truth.UNDEFINED) == {"a", "b"}
        assert model.holds(QLiteral("a", UNDEF))

    def test_counterexample(self, counterexample_program):
        model = standard_wfm(counterexample_program)
        assert model.atoms_with(Truth.TRUE) == {"a", "c"}
        assert model.atoms_with(Truth.FALSE) == {"b", "d"}


# properties on random programs

def _check_enabled_iff_holds(program):
    model = causal_wfm(program)
    truth = standard_wfm(program)
    for literal, value in query_all(model):
        has_enabled = bool(algebra.enabled_addends(value))
        assert has_enabled == truth.holds(literal), (literal, value)


@pytest.mark.parametrize("name", ["bond", "cycle", "counterexample", "fact_not_a", "enabler_chain", "railway"])
def test_enabled_addend_iff_literal_holds_on_corpus(name):
    _check_enabled_iff_holds(load_corpus(name))


def test_enabled_addend_iff_literal_holds(rng):
    for _ in range(40):
        _check_enabled_iff_holds(random_program(rng))


@pytest.mark.slow
def test_enabled_addend_iff_literal_holds_many(rng):
    for _ in range(200):
        _check_enabled_iff_holds(random_program(rng))


def _check_rule_removal(program):
    """Dropping inhibitor ``~r`` from a justification gives one of the program without ``r``."""
    model = causal_wfm(program)
    for label in sorted(program.labels):
        removed = ElementaryTerm(label, 1)
        reduced = causal_wfm(program.without_labels({label}))
        for atom in program.atoms:
            # addends that use r as a cause cannot survive its removal
            kept = algebra.from_graphs(
                graph for graph in model.lfp[atom].addends if label not in graph.labels(0)
            )
            assert algebra.leq(algebra.remove_elementary(removed, kept), reduced.lfp[atom]), (label, atom)


def test_rule_removal(rng):
    _check_rule_removal(load_corpus("bond"))
    for _ in range(30):
        _check_rule_removal(random_program(rng))


@pytest.mark.slow
def test_rule_removal_many(rng):
    for _ in range(100):
        _check_rule_removal(random_program(rng))


def test_least_below_greatest(rng):
    for _ in range(30):
        program = random_program(rng)
        model = causal_wfm(program)
        assert model.lfp.leq(model.gfp)
        assert gamma(program, model.gfp) == model.lfp


def test_stratified_programs_are_complete(rng):
    checked = 0
    while checked < 20:
        program = random_program(rng)
        if not program.is_stratified:
            continue
        model = causal_wfm(program)
        assert model.lfp == model.gfp
        checked += 1


def _positive(program: LabelledProgram) -> LabelledProgram:
    return LabelledProgram(tuple(Rule(rule.label, rule.head, rule.positive_body) for rule in program.rules))


def _horn_closure(program: LabelledProgram) -> set:
    true: set = set()
    changed = True
    while changed:
        changed = False
        for rule in program.rules:
            if rule.head not in true and all(atom in true for atom in rule.positive_body):
                true.add(rule.head)
                changed = True
    return true


def test_positive_least_model_is_the_minimal_model(rng):
    for _ in range(40):
        program = _positive(random_program(rng))
        model, steps = least_model_with_steps(program)
        assert model.support == _horn_closure(program)
        assert steps <= len(program.rules)


def test_gamma_is_antimonotonic_on_random_programs(rng):
    for _ in range(30):
        program = random_program(rng)
        bottom = Interpretation.bottom()
        model = causal_wfm(program)
        for lower, upper in ((bottom, gamma(program, bottom)), (bottom, model.lfp), (model.lfp, model.gfp)):
            assert lower.leq(upper)
            assert gamma(program, upper).leq(gamma(program, lower))


def test_rule_order_does_not_change_the_model(rng):
    for _ in range(20):
        program = random_program(rng)
        rules = list(program.rules)
        rng.shuffle(rules)
        model, shuffled = causal_wfm(program), causal_wfm(LabelledProgram(tuple(rules)))
        assert model.lfp == shuffled.lfp
        assert model.gfp == shuffled.gfp
        assert [(str(literal), str(value)) for literal, value in query_all(model)] == [
            (str(literal), str(value)) for literal, value in query_all(shuffled)
        ]
