import random
from itertools import product

import pytest

from peirce import formulas as fm
from peirce.errors import TooManyAtomsError
from peirce.graphs import Dialect
from peirce.notation import parse_formula, parse_graph, print_formula, print_graph
from peirce.semantics import (
    entails,
    eval_classical,
    formula_to_graph,
    graph_to_formula,
    taut_classical,
    taut_int,
)

from genutil import random_formula, random_graph

C = Dialect.CLASSICAL
I = Dialect.INTUITIONISTIC


def f(text):
    return parse_formula(text)


class TestGraphToFormula:
    def test_cut_is_negation(self):
        g = parse_graph("p (q)", C)
        assert print_formula(graph_to_formula(g)) == "p & ~q"

    def test_scroll_is_implication(self):
        assert print_formula(graph_to_formula(parse_graph("[p | q]", I))) == "p -> q"

    def test_two_loops_are_disjunction(self):
        got = graph_to_formula(parse_graph("[ | p | q]", I))
        assert got == fm.Imp(fm.TOP, fm.Or(fm.Atom("p"), fm.Atom("q")))

    def test_blank_is_truth(self):
        assert graph_to_formula(parse_graph("", C)) == fm.TOP

    def test_empty_cut_is_negated_truth(self):
        assert graph_to_formula(parse_graph("()", C)) == fm.Not(fm.TOP)

    def test_deterministic_canonical_order(self):
        a = graph_to_formula(parse_graph("q p", C))
        b = graph_to_formula(parse_graph("p q", C))
        assert a == b == fm.And(fm.Atom("p"), fm.Atom("q"))


class TestFormulaToGraph:
    def test_classical_implication(self):
        g = formula_to_graph(f("p -> q"), C)
        assert print_graph(g) == "(p (q))"

    def test_intuitionistic_implication(self):
        assert print_graph(formula_to_graph(f("p -> q"), I)) == "[p | q]"

    def test_bottom(self):
        assert print_graph(formula_to_graph(fm.BOT, I)) == "()"

    def test_classical_disjunction(self):
        assert print_graph(formula_to_graph(f("p | q"), C)) == "((p) (q))"

    def test_intuitionistic_disjunction(self):
        assert print_graph(formula_to_graph(f("p | q"), I)) == "[ | p | q]"

    def test_round_trip_preserves_equivalence(self):
        rng = random.Random(31)
        for _ in range(150):
            formula = random_formula(rng, connectives=6)
            for dialect in (C, I):
                back = graph_to_formula(formula_to_graph(formula, dialect))
                equiv = fm.And(fm.Imp(formula, back), fm.Imp(back, formula))
                if dialect is C:
                    assert taut_classical(equiv)
                else:
                    assert taut_int(equiv)


class TestClassicalOracle:
    def test_excluded_middle(self):
        assert taut_classical(f("p | ~p"))

    def test_double_negation(self):
        assert taut_classical(f("~~p -> p"))

    def test_non_tautology(self):
        assert not taut_classical(f("p -> q"))

    def test_eval(self):
        assert eval_classical(f("p -> q"), {"p": False, "q": False})
        assert not eval_classical(f("p & ~q"), {"p": True, "q": True})

    def test_atom_guard(self):
        wide = fm.Atom("a0")
        for i in range(1, 21):
            wide = fm.And(wide, fm.Atom(f"a{i}"))
        with pytest.raises(TooManyAtomsError):
            taut_classical(wide)

    def test_sixteen_binary_connective_patterns(self):
        # truth tables over two atoms, checked against direct enumeration
        names = ["p", "q"]
        rows = list(product((False, True), repeat=2))
        for pattern in range(16):
            outputs = [(pattern >> i) & 1 == 1 for i in range(4)]
            formula = None
            for row, out in zip(rows, outputs):
                if out:
                    continue
                clause = fm.Or(
                    fm.Atom("p") if not row[0] else fm.Not(fm.Atom("p")),
                    fm.Atom("q") if not row[1] else fm.Not(fm.Atom("q")),
                )
                formula = clause if formula is None else fm.And(formula, clause)
            if formula is None:
                formula = fm.TOP
            expected_taut = all(outputs)
            assert taut_classical(formula) == expected_taut
            for row, out in zip(rows, outputs):
                assignment = dict(zip(names, row))
                assert eval_classical(formula, assignment) == out


class TestIntuitionisticOracle:
    @pytest.mark.parametrize("text", [
        "p -> p",
        "p -> ~~p",
        "~~(p | ~p)",
        "(~p | ~q) -> ~(p & q)",
        "~(p | q) -> (~p & ~q)",
        "(~p & ~q) -> ~(p | q)",
        "(p -> q) -> ~(p & ~q)",
        "F -> q",
        "p & q -> p",
        "p -> (q -> p)",
        "~~~p -> ~p",
    ])
    def test_theorems(self, text):
        assert taut_int(f(text))

    @pytest.mark.parametrize("text", [
        "p | ~p",
        "~~p -> p",
        "((p -> q) -> p) -> p",
        "~(p & q) -> (~p | ~q)",
        "~(p & ~q) -> (p -> q)",
        "(p -> q) | (q -> p)",
    ])
    def test_non_theorems(self, text):
        assert not taut_int(f(text))

    def test_int_implies_classical_random(self):
        rng = random.Random(37)
        for _ in range(400):
            formula = random_formula(rng)
            if taut_int(formula):
                assert taut_classical(formula)


class TestEntails:
    def test_one_way_passage(self):
        assert entails(I, f("p -> q"), f("~(p & ~q)"))
        assert not entails(I, f("~(p & ~q)"), f("p -> q"))
        assert entails(C, f("~(p & ~q)"), f("p -> q"))
