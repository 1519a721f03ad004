import pytest

from peirce.calculus import System, check_script
from peirce.errors import BoundsExceededError
from peirce.graphs import Dialect, Graph, equals
from peirce.notation import parse_graph
from peirce.search import SearchBounds, default_vocabulary, derive
from peirce.semantics import formula_to_graph, graph_to_formula, taut_classical, taut_int
from peirce.notation import parse_formula

CL = System.CLASSICAL
IN = System.INTUITIONISTIC


def goal_graph(text, system):
    return formula_to_graph(parse_formula(text), system.dialect)


class TestDerive:
    def test_identity_derivation_is_empty(self):
        g = parse_graph("p (q)", Dialect.CLASSICAL)
        script = derive(CL, g, parse_graph("p (q)", Dialect.CLASSICAL))
        assert script is not None and script.steps == ()

    def test_three_step_classical(self):
        script = derive(CL, Graph(), parse_graph("(p (p))", Dialect.CLASSICAL),
                        SearchBounds(max_depth=4))
        assert script is not None and len(script.steps) == 3
        report = check_script(script)
        assert report.ok and equals(report.final, parse_graph("(p (p))", Dialect.CLASSICAL))

    def test_double_cut_elim_one_step(self):
        script = derive(CL, parse_graph("((p))", Dialect.CLASSICAL),
                        parse_graph("p", Dialect.CLASSICAL), SearchBounds(max_depth=1))
        assert script is not None and len(script.steps) == 1

    def test_certified_scripts(self):
        for system, text in [(CL, "p & q -> p"), (IN, "F -> q"), (IN, "p -> p")]:
            script = derive(system, Graph(), goal_graph(text, system))
            assert script is not None
            assert check_script(script).ok

    def test_monotonicity_in_depth(self):
        goal = goal_graph("p -> p", IN)
        shallow = derive(IN, Graph(), goal, SearchBounds(max_depth=3))
        deeper = derive(IN, Graph(), goal, SearchBounds(max_depth=7))
        assert shallow is not None and deeper is not None
        assert len(deeper.steps) == len(shallow.steps)

    def test_deterministic_result(self):
        goal = goal_graph("p -> ~~p", IN)
        a = derive(IN, Graph(), goal)
        b = derive(IN, Graph(), goal)
        assert a == b

    def test_soundness_of_found_derivations(self):
        for system, text in [(CL, "~~p -> p"), (IN, "p -> (q -> p)")]:
            goal = goal_graph(text, system)
            script = derive(system, Graph(), goal)
            assert script is not None
            final = check_script(script).final
            formula = graph_to_formula(final)
            if system is CL:
                assert taut_classical(formula)
            else:
                assert taut_int(formula)

    def test_excluded_middle_absent(self):
        goal = goal_graph("p | ~p", IN)
        assert not taut_int(parse_formula("p | ~p"))
        script = derive(IN, Graph(), goal, SearchBounds(max_depth=6))
        assert script is None

    def test_bounds_exceeded_is_distinct(self):
        goal = goal_graph("((p -> q) -> p) -> p", CL)
        with pytest.raises(BoundsExceededError):
            derive(CL, Graph(), goal, SearchBounds(max_depth=12, max_visited=5))


class TestVocabulary:
    def test_subgraphs_of_endpoints(self):
        g = parse_graph("[p | q]", Dialect.INTUITIONISTIC)
        vocab = default_vocabulary(Graph(), g)
        texts = {t for t in map(str, ())}
        from peirce.notation import print_graph
        texts = {print_graph(v) for v in vocab}
        assert "p" in texts and "q" in texts and "[p | q]" in texts
        assert "" not in texts
