"""Graph/formula translations and the two propositional oracles.

The classical oracle is a brute-force truth table (guarded at 20 atoms).
The intuitionistic oracle is a contraction-free sequent procedure in the
G4ip style: the four implication-left refinements make it terminate on
every input, and it decides full IPC.  Negation is treated internally as
implication into falsum.
"""

from __future__ import annotations

from itertools import product

from . import formulas as fm
from .errors import TooManyAtomsError
from .graphs import Atom, Dialect, Graph, Item, Scroll, canonicalize

# ---------------------------------------------------------------------------
# Translations
# ---------------------------------------------------------------------------


def graph_to_formula(g: Graph) -> fm.Formula:
    """Juxtaposition is conjunction, the blank area is truth, a zero-loop
    scroll is negation, and ``[g0 | g1 | ... | gn]`` is
    ``g0 -> (g1 | ... | gn)``.  Items are folded right-nested in canonical
    order, so the result is deterministic."""
    return _area_formula(canonicalize(g))


def _area_formula(g: Graph) -> fm.Formula:
    if not g.items:
        return fm.TOP
    parts = [_item_formula(item) for item in g.items]
    out = parts[-1]
    for part in reversed(parts[:-1]):
        out = fm.And(part, out)
    return out


def _item_formula(item: Item) -> fm.Formula:
    if isinstance(item, Atom):
        return fm.Atom(item.name)
    antecedent = _area_formula(item.outer)
    if not item.loops:
        return fm.Not(antecedent)
    disjuncts = [_area_formula(loop) for loop in item.loops]
    out = disjuncts[-1]
    for part in reversed(disjuncts[:-1]):
        out = fm.Or(part, out)
    return fm.Imp(antecedent, out)


def formula_to_graph(f: fm.Formula, dialect: Dialect) -> Graph:
    return Graph(_encode(f, dialect))


def _encode(f: fm.Formula, d: Dialect) -> tuple[Item, ...]:
    if isinstance(f, fm.Atom):
        return (Atom(f.name),)
    if isinstance(f, fm.Top):
        return ()
    if isinstance(f, fm.Bot):
        return (Scroll(Graph()),)
    if isinstance(f, fm.And):
        return _encode(f.left, d) + _encode(f.right, d)
    if isinstance(f, fm.Not):
        return (Scroll(Graph(_encode(f.body, d))),)
    if d is Dialect.CLASSICAL:
        if isinstance(f, fm.Imp):
            inner = Scroll(Graph(_encode(f.right, d)))
            return (Scroll(Graph(_encode(f.left, d) + (inner,))),)
        # A | B  ~>  ((A)(B))
        left = Scroll(Graph(_encode(f.left, d)))
        right = Scroll(Graph(_encode(f.right, d)))
        return (Scroll(Graph((left, right))),)
    if isinstance(f, fm.Imp):
        return (Scroll(Graph(_encode(f.left, d)), (Graph(_encode(f.right, d)),)),)
    # A | B  ~>  [ | A | B]
    return (Scroll(Graph(), (Graph(_encode(f.left, d)), Graph(_encode(f.right, d)))),)


# ---------------------------------------------------------------------------
# Classical oracle
# ---------------------------------------------------------------------------


def eval_classical(f: fm.Formula, assignment: dict[str, bool]) -> bool:
    if isinstance(f, fm.Atom):
        return assignment[f.name]
    if isinstance(f, fm.Top):
        return True
    if isinstance(f, fm.Bot):
        return False
    if isinstance(f, fm.Not):
        return not eval_classical(f.body, assignment)
    if isinstance(f, fm.And):
        return eval_classical(f.left, assignment) and eval_classical(f.right, assignment)
    if isinstance(f, fm.Or):
        return eval_classical(f.left, assignment) or eval_classical(f.right, assignment)
    return (not eval_classical(f.left, assignment)) or eval_classical(f.right, assignment)


def taut_classical(f: fm.Formula) -> bool:
    names = sorted(fm.atoms(f))
    if len(names) > 20:
        raise TooManyAtomsError(f"{len(names)} atoms exceed the truth-table guard")
    for values in product((False, True), repeat=len(names)):
        if not eval_classical(f, dict(zip(names, values))):
            return False
    return True


# ---------------------------------------------------------------------------
# Intuitionistic oracle (G4ip)
# ---------------------------------------------------------------------------


def _strip_not(f: fm.Formula) -> fm.Formula:
    if isinstance(f, fm.Not):
        return fm.Imp(_strip_not(f.body), fm.BOT)
    if isinstance(f, fm.And):
        return fm.And(_strip_not(f.left), _strip_not(f.right))
    if isinstance(f, fm.Or):
        return fm.Or(_strip_not(f.left), _strip_not(f.right))
    if isinstance(f, fm.Imp):
        return fm.Imp(_strip_not(f.left), _strip_not(f.right))
    return f


def taut_int(f: fm.Formula) -> bool:
    """True iff ``f`` is a theorem of intuitionistic propositional logic."""
    cache: dict = {}
    return _prove(frozenset(), _strip_not(f), cache)


def _prove(gamma: frozenset, goal: fm.Formula, cache: dict) -> bool:
    key = (gamma, goal)
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = _prove_uncached(gamma, goal, cache)
    cache[key] = result
    return result


def _prove_uncached(gamma: frozenset, goal: fm.Formula, cache: dict) -> bool:
    if isinstance(goal, fm.Top) or fm.BOT in gamma or goal in gamma:
        return True
    # invertible right rules
    if isinstance(goal, fm.And):
        return _prove(gamma, goal.left, cache) and _prove(gamma, goal.right, cache)
    if isinstance(goal, fm.Imp):
        return _prove(gamma | {goal.left}, goal.right, cache)
    # invertible left rules
    for f in gamma:
        rest = gamma - {f}
        if isinstance(f, fm.Top):
            return _prove(rest, goal, cache)
        if isinstance(f, fm.And):
            return _prove(rest | {f.left, f.right}, goal, cache)
        if isinstance(f, fm.Or):
            return (_prove(rest | {f.left}, goal, cache)
                    and _prove(rest | {f.right}, goal, cache))
        if isinstance(f, fm.Imp):
            head = f.left
            if isinstance(head, fm.Top):
                return _prove(rest | {f.right}, goal, cache)
            if isinstance(head, fm.Bot):
                return _prove(rest, goal, cache)
            if isinstance(head, fm.And):
                return _prove(rest | {fm.Imp(head.left, fm.Imp(head.right, f.right))},
                              goal, cache)
            if isinstance(head, fm.Or):
                return _prove(rest | {fm.Imp(head.left, f.right),
                                      fm.Imp(head.right, f.right)}, goal, cache)
            if isinstance(head, fm.Atom) and head in gamma:
                return _prove(rest | {f.right}, goal, cache)
    # non-invertible choices
    if isinstance(goal, fm.Or):
        if _prove(gamma, goal.left, cache) or _prove(gamma, goal.right, cache):
            return True
    for f in gamma:
        if isinstance(f, fm.Imp) and isinstance(f.left, fm.Imp):
            rest = gamma - {f}
            inner = f.left
            if (_prove(rest | {fm.Imp(inner.right, f.right)}, inner, cache)
                    and _prove(rest | {f.right}, goal, cache)):
                return True
    return False


def entails(logic: Dialect, f1: fm.Formula, f2: fm.Formula) -> bool:
    """Whether ``f1 -> f2`` is a tautology of the given logic."""
    implication = fm.Imp(f1, f2)
    if logic is Dialect.CLASSICAL:
        return taut_classical(implication)
    return taut_int(implication)
