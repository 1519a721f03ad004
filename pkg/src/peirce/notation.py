"""Concrete syntax for graphs and formulas.

Graph grammar::

    graph := item*
    item  := ATOM | '(' graph ')' | '[' graph ('|' graph)* ']'

Whitespace separates items.  ``(g)`` is the zero-loop scroll (the cut);
``[g0 | g1 | ... | gn]`` is a scroll with outer ``g0`` and loops
``g1..gn``; empty text is the blank sheet.  The printer emits
single-space-separated items, cuts as ``( ... )``, loopful scrolls as
``[ ... | ... ]``, and round-trips exactly (index-stable).

Formula grammar: atoms, ``T``, ``F``, ``~``, ``&``, ``|``, ``->`` and
parentheses, with precedence ``~ > & > | > ->``; ``->`` associates right,
``&`` and ``|`` left.
"""

from __future__ import annotations

from . import formulas as fm
from .errors import DialectError, ParseError
from .graphs import ATOM_NAME, Atom, Dialect, Graph, Item, Scroll, well_formed

# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


def parse_graph(text: str, dialect: Dialect) -> Graph:
    graph, pos = _parse_area(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r}", pos)
    bad = well_formed(graph, dialect)
    if bad:
        raise DialectError(f"{bad[0].reason} at {bad[0].path}")
    return graph


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_area(text: str, pos: int) -> tuple[Graph, int]:
    items: list[Item] = []
    while True:
        pos = _skip_ws(text, pos)
        if pos == len(text) or text[pos] in ")]|":
            return Graph(tuple(items)), pos
        item, pos = _parse_item(text, pos)
        items.append(item)


def _parse_item(text: str, pos: int) -> tuple[Item, int]:
    ch = text[pos]
    if ch == "(":
        inner, pos = _parse_area(text, pos + 1)
        if pos < len(text) and text[pos] == "|":
            raise ParseError("'|' is only valid inside '[ ]'", pos)
        if pos == len(text) or text[pos] != ")":
            raise ParseError("unclosed '('", pos)
        return Scroll(inner), pos + 1
    if ch == "[":
        outer, pos = _parse_area(text, pos + 1)
        loops: list[Graph] = []
        while pos < len(text) and text[pos] == "|":
            loop, pos = _parse_area(text, pos + 1)
            loops.append(loop)
        if pos == len(text) or text[pos] != "]":
            raise ParseError("unclosed '['", pos)
        return Scroll(outer, tuple(loops)), pos + 1
    if ch == "|":
        raise ParseError("'|' is only valid inside '[ ]'", pos)
    if ch in ")]":
        raise ParseError(f"unmatched {ch!r}", pos)
    end = pos
    while end < len(text) and (text[end].isalnum() or text[end] == "_"):
        end += 1
    name = text[pos:end]
    if not ATOM_NAME.match(name):
        raise ParseError(f"bad atom name {name!r}", pos)
    return Atom(name), end


def print_graph(g: Graph) -> str:
    return " ".join(_print_item(item) for item in g.items)


def _print_item(item: Item) -> str:
    if isinstance(item, Atom):
        return item.name
    if item.is_cut:
        return f"({print_graph(item.outer)})"
    areas = [print_graph(item.outer)] + [print_graph(l) for l in item.loops]
    return "[" + " | ".join(areas) + "]"


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

_FORMULA_KEYWORDS = {"T": fm.TOP, "F": fm.BOT}


class _FormulaParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> fm.Formula:
        f = self.imp()
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return f

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos:self.pos + 1]

    def imp(self) -> fm.Formula:
        left = self.disj()
        self.skip_ws()
        if self.text.startswith("->", self.pos):
            self.pos += 2
            return fm.Imp(left, self.imp())
        return left

    def disj(self) -> fm.Formula:
        f = self.conj()
        while self.peek() == "|":
            self.pos += 1
            f = fm.Or(f, self.conj())
        return f

    def conj(self) -> fm.Formula:
        f = self.unary()
        while self.peek() == "&":
            self.pos += 1
            f = fm.And(f, self.unary())
        return f

    def unary(self) -> fm.Formula:
        ch = self.peek()
        if ch == "~":
            self.pos += 1
            return fm.Not(self.unary())
        return self.primary()

    def primary(self) -> fm.Formula:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            f = self.imp()
            if self.peek() != ")":
                raise ParseError("unclosed '('", self.pos)
            self.pos += 1
            return f
        if ch == "":
            raise ParseError("formula expected", self.pos)
        end = self.pos
        while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
            end += 1
        name = self.text[self.pos:end]
        if name in _FORMULA_KEYWORDS:
            self.pos = end
            return _FORMULA_KEYWORDS[name]
        if not ATOM_NAME.match(name):
            raise ParseError(f"bad token {self.text[self.pos:self.pos + 1]!r}", self.pos)
        self.pos = end
        return fm.Atom(name)


def parse_formula(text: str) -> fm.Formula:
    return _FormulaParser(text).parse()


_LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_NOT, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _formula_level(f: fm.Formula) -> int:
    if isinstance(f, fm.Imp):
        return _LEVEL_IMP
    if isinstance(f, fm.Or):
        return _LEVEL_OR
    if isinstance(f, fm.And):
        return _LEVEL_AND
    if isinstance(f, fm.Not):
        return _LEVEL_NOT
    return _LEVEL_ATOM


def print_formula(f: fm.Formula) -> str:
    return _print_formula(f, _LEVEL_IMP)


def _print_formula(f: fm.Formula, minimum: int) -> str:
    level = _formula_level(f)
    if isinstance(f, fm.Atom):
        body = f.name
    elif isinstance(f, fm.Top):
        body = "T"
    elif isinstance(f, fm.Bot):
        body = "F"
    elif isinstance(f, fm.Not):
        body = "~" + _print_formula(f.body, _LEVEL_NOT)
    elif isinstance(f, fm.Imp):
        body = _print_formula(f.left, _LEVEL_OR) + " -> " + _print_formula(f.right, _LEVEL_IMP)
    elif isinstance(f, fm.Or):
        body = _print_formula(f.left, _LEVEL_OR) + " | " + _print_formula(f.right, _LEVEL_AND)
    else:
        body = _print_formula(f.left, _LEVEL_AND) + " & " + _print_formula(f.right, _LEVEL_NOT)
    if level < minimum:
        return f"({body})"
    return body
