"""Core data model for existential graphs.

A graph is a juxtaposition (ordered sequence) of items.  An item is either
an atom or a scroll: an outer closed curve with zero or more loops glued to
its inside.  A scroll with zero loops is the plain Alpha cut, so one item
type covers both dialects.  Boundaries nest and never intersect, which the
tree representation gives for free.

Areas are stored in author order so paths stay stable; equality is by
multiset, via :func:`canonicalize`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .errors import InvalidPathError

ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

EVEN = "even"
ODD = "odd"


class Dialect(Enum):
    CLASSICAL = "classical"
    INTUITIONISTIC = "intuitionistic"


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Scroll:
    outer: "Graph"
    loops: tuple["Graph", ...] = ()

    @property
    def is_cut(self) -> bool:
        return not self.loops


Item = Union[Atom, Scroll]


@dataclass(frozen=True)
class Graph:
    items: tuple[Item, ...] = ()

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Item]:
        return iter(self.items)


BLANK = Graph()


def cut(*items: Item) -> Scroll:
    """A zero-loop scroll around the given items."""
    return Scroll(Graph(tuple(items)))


def scroll(outer: tuple[Item, ...], *loops: tuple[Item, ...]) -> Scroll:
    return Scroll(Graph(tuple(outer)), tuple(Graph(tuple(l)) for l in loops))


def node_count(g: Graph) -> int:
    total = 0
    for item in g.items:
        if isinstance(item, Atom):
            total += 1
        else:
            total += 1 + node_count(item.outer)
            for loop in item.loops:
                total += node_count(loop)
    return total


# ---------------------------------------------------------------------------
# Paths
# ---------------------------------------------------------------------------

OUTER = "outer"


def loop_region(k: int) -> tuple[str, int]:
    return ("loop", k)


@dataclass(frozen=True)
class Path:
    """An address into a graph.

    ``parts`` alternates item indices (int) and region selectors, starting
    with an index.  A path ending after an index addresses an item; a path
    ending after a region addresses an area.  The empty path addresses the
    sheet.  Text form is dot-separated (``1.outer.0``, ``2.loop0``), with
    the empty path written ``/``.
    """

    parts: tuple = ()

    def __post_init__(self):
        for pos, part in enumerate(self.parts):
            if pos % 2 == 0:
                if not isinstance(part, int) or part < 0:
                    raise InvalidPathError(f"step {pos}: expected item index, got {part!r}")
            else:
                if part != OUTER and not (
                    isinstance(part, tuple) and len(part) == 2 and part[0] == "loop"
                    and isinstance(part[1], int) and part[1] >= 0
                ):
                    raise InvalidPathError(f"step {pos}: expected region selector, got {part!r}")

    @property
    def is_area(self) -> bool:
        return len(self.parts) % 2 == 0

    @property
    def is_item(self) -> bool:
        return len(self.parts) % 2 == 1

    def item(self, index: int) -> "Path":
        if not self.is_area:
            raise InvalidPathError("can only select an item inside an area")
        return Path(self.parts + (index,))

    def outer(self) -> "Path":
        if not self.is_item:
            raise InvalidPathError("outer region belongs to an item")
        return Path(self.parts + (OUTER,))

    def loop(self, k: int) -> "Path":
        if not self.is_item:
            raise InvalidPathError("loop region belongs to an item")
        return Path(self.parts + (loop_region(k),))

    def parent_area(self) -> "Path":
        if not self.is_item:
            raise InvalidPathError("only item paths have a parent area")
        return Path(self.parts[:-1])

    def starts_with(self, prefix: "Path") -> bool:
        return self.parts[: len(prefix.parts)] == prefix.parts

    def crossings(self) -> tuple:
        """The boundary curves crossed walking from the sheet to this address.

        Entering a scroll's outer area crosses one curve; entering a loop
        crosses the outer curve and the loop curve.  Polarity is the parity
        of this sequence's length, and scope questions (iteration) are
        prefix questions on it.
        """
        crossed = []
        for pos in range(1, len(self.parts), 2):
            owner = self.parts[:pos]
            region = self.parts[pos]
            crossed.append((owner, OUTER))
            if region != OUTER:
                crossed.append((owner, region))
        return tuple(crossed)

    @staticmethod
    def parse(text: str) -> "Path":
        text = text.strip()
        if text in ("", "/"):
            return Path()
        parts: list = []
        for pos, chunk in enumerate(text.split(".")):
            if pos % 2 == 0:
                if not chunk.isdigit():
                    raise InvalidPathError(f"bad item index {chunk!r} in path {text!r}")
                parts.append(int(chunk))
            elif chunk == OUTER:
                parts.append(OUTER)
            elif chunk.startswith("loop") and chunk[4:].isdigit():
                parts.append(loop_region(int(chunk[4:])))
            else:
                raise InvalidPathError(f"bad region {chunk!r} in path {text!r}")
        return Path(tuple(parts))

    def __str__(self) -> str:
        if not self.parts:
            return "/"
        chunks = []
        for part in self.parts:
            if isinstance(part, int):
                chunks.append(str(part))
            elif part == OUTER:
                chunks.append(OUTER)
            else:
                chunks.append(f"loop{part[1]}")
        return ".".join(chunks)


SHEET = Path()


# ---------------------------------------------------------------------------
# Resolution and surgery
# ---------------------------------------------------------------------------

def resolve(g: Graph, path: Path) -> Union[Item, Graph]:
    """The item or area (as a Graph) addressed by ``path``."""
    node: Graph = g
    parts = path.parts
    pos = 0
    while pos < len(parts):
        index = parts[pos]
        if index >= len(node.items):
            raise InvalidPathError(f"item index {index} out of range at {Path(parts[:pos + 1])}")
        item = node.items[index]
        pos += 1
        if pos == len(parts):
            return item
        region = parts[pos]
        pos += 1
        if not isinstance(item, Scroll):
            raise InvalidPathError(f"atom at {Path(parts[:pos - 1])} has no regions")
        if region == OUTER:
            node = item.outer
        else:
            k = region[1]
            if k >= len(item.loops):
                raise InvalidPathError(f"loop {k} out of range at {Path(parts[:pos])}")
            node = item.loops[k]
    return node


def resolve_area(g: Graph, path: Path) -> Graph:
    if not path.is_area:
        raise InvalidPathError(f"{path} addresses an item, not an area")
    area = resolve(g, path)
    assert isinstance(area, Graph)
    return area


def resolve_item(g: Graph, path: Path) -> Item:
    if not path.is_item:
        raise InvalidPathError(f"{path} addresses an area, not an item")
    item = resolve(g, path)
    return item  # type: ignore[return-value]


def polarity(g: Graph, area: Path) -> str:
    """EVEN or ODD: parity of boundary crossings from the sheet."""
    resolve_area(g, area)
    return EVEN if len(area.crossings()) % 2 == 0 else ODD


def replace_at(g: Graph, area: Path, new_contents: Graph) -> Graph:
    """``g`` with the addressed area's contents replaced."""
    if not area.is_area:
        raise InvalidPathError(f"{area} addresses an item, not an area")
    resolve(g, area)
    return _rebuild(g, area.parts, new_contents)


def _rebuild(node: Graph, parts: tuple, new_contents: Graph) -> Graph:
    if not parts:
        return new_contents
    index, region = parts[0], parts[1]
    item = node.items[index]
    assert isinstance(item, Scroll)
    if region == OUTER:
        new_item = Scroll(_rebuild(item.outer, parts[2:], new_contents), item.loops)
    else:
        k = region[1]
        loops = list(item.loops)
        loops[k] = _rebuild(loops[k], parts[2:], new_contents)
        new_item = Scroll(item.outer, tuple(loops))
    items = list(node.items)
    items[index] = new_item
    return Graph(tuple(items))


def splice_item(g: Graph, item_path: Path, replacement: tuple[Item, ...]) -> Graph:
    """Replace the addressed item by zero or more items, in place."""
    resolve_item(g, item_path)
    area_path = item_path.parent_area()
    index = item_path.parts[-1]
    area = resolve_area(g, area_path)
    items = area.items[:index] + replacement + area.items[index + 1:]
    return replace_at(g, area_path, Graph(items))


def insert_items(g: Graph, area_path: Path, new_items: tuple[Item, ...]) -> Graph:
    """Append items at the end of the addressed area."""
    area = resolve_area(g, area_path)
    return replace_at(g, area_path, Graph(area.items + new_items))


# ---------------------------------------------------------------------------
# Canonical form and equality
# ---------------------------------------------------------------------------

def item_key(item: Item) -> tuple:
    if isinstance(item, Atom):
        return (0, item.name)
    return (1, graph_key(item.outer), tuple(sorted(graph_key(l) for l in item.loops)))


def graph_key(g: Graph) -> tuple:
    return tuple(sorted(item_key(i) for i in g.items))


def canonicalize(g: Graph) -> Graph:
    """Sort every area and every loop list by structural key.  Idempotent;
    used for equality and hashing, never applied to stored graphs."""
    items = [_canonical_item(i) for i in g.items]
    items.sort(key=item_key)
    return Graph(tuple(items))


def _canonical_item(item: Item) -> Item:
    if isinstance(item, Atom):
        return item
    loops = sorted((canonicalize(l) for l in item.loops), key=graph_key)
    return Scroll(canonicalize(item.outer), tuple(loops))


def equals(g1: Graph, g2: Graph) -> bool:
    """Multiset equality of areas, recursively."""
    return canonicalize(g1) == canonicalize(g2)


# ---------------------------------------------------------------------------
# Walks and well-formedness
# ---------------------------------------------------------------------------

def walk_areas(g: Graph, prefix: Path = SHEET) -> Iterator[tuple[Path, Graph]]:
    """All (area path, area) pairs in depth-first order, sheet first."""
    yield prefix, g
    for index, item in enumerate(g.items):
        if isinstance(item, Scroll):
            item_path = prefix.item(index)
            yield from walk_areas(item.outer, item_path.outer())
            for k, loop in enumerate(item.loops):
                yield from walk_areas(loop, item_path.loop(k))


def walk_items(g: Graph, prefix: Path = SHEET) -> Iterator[tuple[Path, Item]]:
    """All (item path, item) pairs in depth-first order."""
    for index, item in enumerate(g.items):
        item_path = prefix.item(index)
        yield item_path, item
        if isinstance(item, Scroll):
            yield from walk_items(item.outer, item_path.outer())
            for k, loop in enumerate(item.loops):
                yield from walk_items(loop, item_path.loop(k))


@dataclass(frozen=True)
class Violation:
    path: Path
    reason: str


def well_formed(g: Graph, dialect: Dialect) -> list[Violation]:
    """Empty list iff ``g`` is valid in ``dialect``.

    The tree representation rules out intersecting boundaries by
    construction, so the checks left are atom-name syntax and, for the
    classical dialect, the absence of loops.
    """
    out: list[Violation] = []
    for path, item in walk_items(g):
        if isinstance(item, Atom):
            if not ATOM_NAME.match(item.name):
                out.append(Violation(path, f"bad atom name {item.name!r}"))
        elif item.loops and dialect is Dialect.CLASSICAL:
            out.append(Violation(path, "scroll loops are not classical signs"))
    return out
