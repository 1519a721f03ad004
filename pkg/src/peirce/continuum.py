"""Ordinal-indexed sequences: a desk-scale model of the continuum carrier.

Ordinals below epsilon-0 live in Cantor normal form: a finite list of
(exponent, coefficient) terms with strictly decreasing exponents, the
exponents again ordinals.  Elements are finitely-piecewise-constant
functions from an ordinal domain to exact rationals; adjacent pieces of
equal value merge under ordinal addition of lengths, which makes equality
and lexicographic comparison decidable.

``extends`` is the inversion relation (x extends y when y is a strict
initial restriction of x), monads are the collections of proper
extensions, and ``tail``/``concat`` realize the isomorphism between any
monad and the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import EmptyElementError, NotInMonadError, OrdinalUnderflowError, ParseError

# ---------------------------------------------------------------------------
# Ordinals in Cantor normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        for exponent, coeff in self.terms:
            if coeff < 1:
                raise ValueError("coefficients must be positive")
        for (e1, _), (e2, _) in zip(self.terms, self.terms[1:]):
            if ord_cmp(e1, e2) <= 0:
                raise ValueError("exponents must strictly decrease")

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        return print_ordinal(self)


ZERO = Ordinal()


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n == 0:
        return ZERO
    return Ordinal(((ZERO, n),))


ONE = from_int(1)
OMEGA = Ordinal(((ONE, 1),))


def w_pow(exponent: Ordinal, coeff: int = 1) -> Ordinal:
    return Ordinal(((exponent, coeff),))


def ord_cmp(a: Ordinal, b: Ordinal) -> int:
    """-1, 0, or 1: lexicographic comparison of CNF term lists."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum: terms of ``a`` below ``b``'s leading exponent are
    absorbed."""
    if b.is_zero():
        return a
    if a.is_zero():
        return b
    lead = b.terms[0][0]
    keep = [t for t in a.terms if ord_cmp(t[0], lead) > 0]
    boundary = [t for t in a.terms if ord_cmp(t[0], lead) == 0]
    if boundary:
        merged = (lead, boundary[0][1] + b.terms[0][1])
        return Ordinal(tuple(keep) + (merged,) + b.terms[1:])
    return Ordinal(tuple(keep) + b.terms)


def ord_sub_left(b: Ordinal, d: Ordinal) -> Ordinal:
    """The unique g with b + g = d; OrdinalUnderflowError when b > d."""
    if ord_cmp(b, d) > 0:
        raise OrdinalUnderflowError(f"{b} > {d}")
    for i in range(len(b.terms)):
        (be, bc), (de, dc) = b.terms[i], d.terms[i]
        if ord_cmp(be, de) < 0:
            return Ordinal(d.terms[i:])
        if bc < dc:
            return Ordinal(((de, dc - bc),) + d.terms[i + 1:])
        # equal terms: keep walking
    return Ordinal(d.terms[len(b.terms):])


def ord_is_finite(a: Ordinal) -> bool:
    return a.is_zero() or (len(a.terms) == 1 and a.terms[0][0].is_zero())


# ---------------------------------------------------------------------------
# Ordinal literals
# ---------------------------------------------------------------------------


def parse_ordinal(text: str) -> Ordinal:
    value, pos = _parse_ordinal_sum(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} in ordinal", pos)
    return value


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_ordinal_sum(text: str, pos: int) -> tuple[Ordinal, int]:
    value, pos = _parse_ordinal_term(text, pos)
    while True:
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == "+":
            term, pos = _parse_ordinal_term(text, pos + 1)
            value = ord_add(value, term)
        else:
            return value, pos


def _parse_ordinal_term(text: str, pos: int, allow_coeff: bool = True) -> tuple[Ordinal, int]:
    pos = _skip_ws(text, pos)
    if pos == len(text):
        raise ParseError("ordinal expected", pos)
    if text[pos].isdigit():
        end = pos
        while end < len(text) and text[end].isdigit():
            end += 1
        return from_int(int(text[pos:end])), end
    if text[pos] != "w":
        raise ParseError(f"unexpected {text[pos]!r} in ordinal", pos)
    pos += 1
    exponent = ONE
    if pos < len(text) and text[pos] == "^":
        pos += 1
        if pos < len(text) and text[pos] == "(":
            exponent, pos = _parse_ordinal_sum(text, pos + 1)
            pos = _skip_ws(text, pos)
            if pos == len(text) or text[pos] != ")":
                raise ParseError("unclosed '(' in ordinal exponent", pos)
            pos += 1
        else:
            # an unparenthesized exponent never takes '*k'; that binds to
            # the enclosing term, so w^2*3 means (w^2)*3
            exponent, pos = _parse_ordinal_term(text, pos, allow_coeff=False)
    coeff = 1
    if allow_coeff:
        pos = _skip_ws(text, pos)
        if pos < len(text) and text[pos] == "*":
            pos = _skip_ws(text, pos + 1)
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == pos:
                raise ParseError("coefficient expected after '*'", pos)
            coeff = int(text[pos:end])
            pos = end
    if coeff < 1:
        raise ParseError("coefficients must be positive", pos)
    return w_pow(exponent, coeff), pos


def print_ordinal(a: Ordinal) -> str:
    """Canonical print: no redundant ``*1`` or ``^1``; composite exponents
    are parenthesized."""
    if a.is_zero():
        return "0"
    chunks = []
    for exponent, coeff in a.terms:
        if exponent.is_zero():
            chunks.append(str(coeff))
            continue
        if exponent == ONE:
            body = "w"
        else:
            exp_text = print_ordinal(exponent)
            if "+" in exp_text or "*" in exp_text:
                exp_text = f"({exp_text})"
            body = f"w^{exp_text}"
        chunks.append(body if coeff == 1 else f"{body}*{coeff}")
    return "+".join(chunks)


# ---------------------------------------------------------------------------
# Continuum elements
# ---------------------------------------------------------------------------


class LexRelation(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    PROPER_PREFIX = "proper_prefix"
    PROPER_EXTENSION = "proper_extension"


@dataclass(frozen=True)
class ContinuumElement:
    """Pieces (length, value): a piecewise-constant map from the ordinal
    interval [0, domain) to rationals.  Construct through ``element`` or
    ``elem_canonicalize`` to get the canonical merged form."""

    pieces: tuple[tuple[Ordinal, Fraction], ...]

    def __str__(self) -> str:
        return print_element(self)


def element(*pieces: tuple[Ordinal | int, Fraction | int | str]) -> ContinuumElement:
    normalized = tuple(
        (p if isinstance(p, Ordinal) else from_int(p), Fraction(v))
        for p, v in pieces
    )
    return elem_canonicalize(ContinuumElement(normalized))


def elem_canonicalize(e: ContinuumElement) -> ContinuumElement:
    """Merge adjacent pieces of equal value (lengths add as ordinals)."""
    if not e.pieces:
        raise EmptyElementError("an element needs at least one piece")
    merged: list[tuple[Ordinal, Fraction]] = []
    for length, value in e.pieces:
        if length.is_zero() or ord_cmp(length, ZERO) < 0:
            raise EmptyElementError("piece lengths must be positive ordinals")
        if merged and merged[-1][1] == value:
            merged[-1] = (ord_add(merged[-1][0], length), value)
        else:
            merged.append((length, value))
    return ContinuumElement(tuple(merged))


def elem_domain(e: ContinuumElement) -> Ordinal:
    total = ZERO
    for length, _ in e.pieces:
        total = ord_add(total, length)
    return total


def lex_compare(x: ContinuumElement, y: ContinuumElement) -> LexRelation:
    """Walk both piece lists in lockstep; decide at the first ordinal
    position where the values differ, otherwise by domain."""
    x = elem_canonicalize(x)
    y = elem_canonicalize(y)
    i = j = 0
    rem_x = rem_y = None
    while i < len(x.pieces) and j < len(y.pieces):
        len_x = rem_x if rem_x is not None else x.pieces[i][0]
        len_y = rem_y if rem_y is not None else y.pieces[j][0]
        val_x, val_y = x.pieces[i][1], y.pieces[j][1]
        if val_x != val_y:
            return LexRelation.LESS if val_x < val_y else LexRelation.GREATER
        c = ord_cmp(len_x, len_y)
        if c == 0:
            i, j, rem_x, rem_y = i + 1, j + 1, None, None
        elif c < 0:
            rem_y = ord_sub_left(len_x, len_y)
            i, rem_x = i + 1, None
        else:
            rem_x = ord_sub_left(len_y, len_x)
            j, rem_y = j + 1, None
    if i < len(x.pieces):
        return LexRelation.PROPER_EXTENSION
    if j < len(y.pieces):
        return LexRelation.PROPER_PREFIX
    return LexRelation.EQUAL


def extends(x: ContinuumElement, y: ContinuumElement) -> bool:
    """The relation x E y: dom(y) < dom(x) and x agrees with y on dom(y)."""
    return lex_compare(x, y) is LexRelation.PROPER_EXTENSION


def tail(x: ContinuumElement, y: ContinuumElement) -> ContinuumElement:
    """The monad isomorphism applied to y: the part of y beyond dom(x).
    Requires y E x (y properly extends x)."""
    if not extends(y, x):
        raise NotInMonadError("tail(x, y) needs y to properly extend x")
    y = elem_canonicalize(y)
    consume = elem_domain(elem_canonicalize(x))
    pieces = list(y.pieces)
    out: list[tuple[Ordinal, Fraction]] = []
    for idx, (length, value) in enumerate(pieces):
        if consume.is_zero():
            out.extend(pieces[idx:])
            break
        if ord_cmp(length, consume) <= 0:
            consume = ord_sub_left(length, consume)
            continue
        out.append((ord_sub_left(consume, length), value))
        consume = ZERO
    return elem_canonicalize(ContinuumElement(tuple(out)))


def concat(x: ContinuumElement, z: ContinuumElement) -> ContinuumElement:
    """The inverse isomorphism: x followed by z.  Always a proper
    extension of x."""
    x = elem_canonicalize(x)
    z = elem_canonicalize(z)
    return elem_canonicalize(ContinuumElement(x.pieces + z.pieces))


# ---------------------------------------------------------------------------
# Element literals
# ---------------------------------------------------------------------------


def parse_element(text: str) -> ContinuumElement:
    pieces: list[tuple[Ordinal, Fraction]] = []
    pos = _skip_ws(text, 0)
    while pos < len(text):
        if text[pos] != "[":
            raise ParseError(f"expected '[' in element, got {text[pos]!r}", pos)
        close = text.find("]", pos)
        if close < 0:
            raise ParseError("unclosed '[' in element", pos)
        body = text[pos + 1:close]
        if ":" not in body:
            raise ParseError("piece needs '<ordinal>:<rational>'", pos)
        ord_text, _, val_text = body.partition(":")
        length = parse_ordinal(ord_text.strip())
        try:
            value = Fraction(val_text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {val_text.strip()!r}", pos) from exc
        if length.is_zero():
            raise ParseError("piece lengths must be positive", pos)
        pieces.append((length, value))
        pos = _skip_ws(text, close + 1)
    if not pieces:
        raise ParseError("element expected", 0)
    return elem_canonicalize(ContinuumElement(tuple(pieces)))


def print_element(e: ContinuumElement) -> str:
    e = elem_canonicalize(e)
    return "".join(f"[{print_ordinal(l)}:{v}]" for l, v in e.pieces)
