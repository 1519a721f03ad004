"""Deterministic static SVG rendering.

Cut and scroll boundaries are drawn as circles (degenerate axis-aligned
ellipses), atoms as text boxes 10 units per character by 16 units high.
Area contents pack left to right with 8-unit padding.  A scroll's loops
sit in a column on the right side of its outer circle, each internally
tangent to it: the loop's centre lies at distance R - r from the outer
centre, exactly, which is the glued-curves reading of the scroll.  Nested
classical cuts stay strictly separated.  Output bytes depend only on the
input graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from .graphs import Atom, Graph, Item, Scroll

PAD = 8.0
CHAR_W = 10.0
TEXT_H = 16.0
MIN_R = 12.0
MARGIN = 10.0


@dataclass
class GeometryNode:
    kind: str  # "sheet", "ellipse" or "text"
    cx: float = 0.0
    cy: float = 0.0
    rx: float = 0.0
    ry: float = 0.0
    text: Optional[str] = None
    children: list["GeometryNode"] = field(default_factory=list)


# sizing ---------------------------------------------------------------------


def _item_extent(item: Item) -> tuple[float, float]:
    if isinstance(item, Atom):
        return (CHAR_W * len(item.name), TEXT_H)
    r = _scroll_radius(item)
    return (2 * r, 2 * r)


def _area_extent(g: Graph) -> tuple[float, float]:
    if not g.items:
        return (0.0, 0.0)
    sizes = [_item_extent(i) for i in g.items]
    width = sum(w for w, _ in sizes) + PAD * (len(sizes) - 1)
    height = max(h for _, h in sizes)
    return (width, height)


def _circumradius(width: float, height: float) -> float:
    return max(MIN_R, math.hypot(width, height) / 2.0 + PAD / 2.0)


def _loop_radius(loop: Graph) -> float:
    return _circumradius(*_area_extent(loop))


def _scroll_radius(item: Scroll) -> float:
    content_r = _circumradius(*_area_extent(item.outer)) if item.outer.items else MIN_R
    if not item.loops:
        return content_r + PAD
    radii = [_loop_radius(l) for l in item.loops]
    column = sum(2 * r for r in radii) + PAD * (len(radii) - 1)
    r = max(content_r + PAD, max(radii) + PAD, column / 2.0 + PAD)
    cw, _ = _area_extent(item.outer)
    while not _loops_fit(r, radii, column, cw):
        r += 2.0
    return r


def _loop_centres(r: float, radii: list[float], column: float) -> list[tuple[float, float]]:
    """Loop centres inside an outer circle of radius ``r``: stacked top to
    bottom on the right, each at distance r - r_i from the centre."""
    centres = []
    y = -column / 2.0
    for ri in radii:
        cy = y + ri
        reach = (r - ri) ** 2 - cy ** 2
        cx = math.sqrt(reach) if reach > 0 else 0.0
        centres.append((cx, cy))
        y += 2 * ri + PAD
    return centres


def _loops_fit(r: float, radii: list[float], column: float, content_w: float) -> bool:
    if r <= column / 2.0 + max(radii):
        return False
    for (cx, cy), ri in zip(_loop_centres(r, radii, column), radii):
        if (r - ri) ** 2 - cy ** 2 <= 0:
            return False
        if cx - ri < content_w / 2.0 + PAD / 2.0:
            return False
    return True


# placement ------------------------------------------------------------------


def layout(g: Graph) -> GeometryNode:
    """Geometry tree mirroring the graph's nesting tree; the root is the
    sheet."""
    width, height = _area_extent(g)
    root = GeometryNode("sheet", rx=width / 2.0, ry=height / 2.0)
    root.children = _place_area(g, 0.0, 0.0)
    return root


def _place_area(g: Graph, cx: float, cy: float) -> list[GeometryNode]:
    width, _ = _area_extent(g)
    nodes = []
    x = cx - width / 2.0
    for item in g.items:
        w, _ = _item_extent(item)
        nodes.append(_place_item(item, x + w / 2.0, cy))
        x += w + PAD
    return nodes


def _place_item(item: Item, cx: float, cy: float) -> GeometryNode:
    if isinstance(item, Atom):
        return GeometryNode("text", cx=cx, cy=cy,
                            rx=CHAR_W * len(item.name) / 2.0, ry=TEXT_H / 2.0,
                            text=item.name)
    r = _scroll_radius(item)
    node = GeometryNode("ellipse", cx=cx, cy=cy, rx=r, ry=r)
    node.children = _place_area(item.outer, cx, cy)
    if item.loops:
        radii = [_loop_radius(l) for l in item.loops]
        column = sum(2 * ri for ri in radii) + PAD * (len(radii) - 1)
        for (dx, dy), ri, loop in zip(_loop_centres(r, radii, column), radii, item.loops):
            loop_node = GeometryNode("ellipse", cx=cx + dx, cy=cy + dy, rx=ri, ry=ri)
            loop_node.children = _place_area(loop, cx + dx, cy + dy)
            node.children.append(loop_node)
    return node


# SVG ------------------------------------------------------------------------


def _fmt(v: float) -> str:
    return f"{v:.9f}"


def _grow(bounds: list[float], x0: float, y0: float, x1: float, y1: float) -> None:
    bounds[0] = min(bounds[0], x0)
    bounds[1] = min(bounds[1], y0)
    bounds[2] = max(bounds[2], x1)
    bounds[3] = max(bounds[3], y1)


def emit_svg(node: GeometryNode) -> str:
    """A stroke-only SVG 1.1 document; byte-identical for equal inputs."""
    shapes: list[str] = []
    bounds = [math.inf, math.inf, -math.inf, -math.inf]

    def visit(n: GeometryNode):
        if n.kind == "ellipse":
            shapes.append(
                f'<ellipse cx="{_fmt(n.cx)}" cy="{_fmt(n.cy)}" '
                f'rx="{_fmt(n.rx)}" ry="{_fmt(n.ry)}" '
                f'fill="none" stroke="black" stroke-width="1.5"/>'
            )
            _grow(bounds, n.cx - n.rx, n.cy - n.ry, n.cx + n.rx, n.cy + n.ry)
        elif n.kind == "text":
            shapes.append(
                f'<text x="{_fmt(n.cx)}" y="{_fmt(n.cy + 5.0)}" '
                f'text-anchor="middle" font-family="monospace" '
                f'font-size="14">{escape(n.text or "")}</text>'
            )
            _grow(bounds, n.cx - n.rx, n.cy - n.ry, n.cx + n.rx, n.cy + n.ry)
        for child in n.children:
            visit(child)

    visit(node)
    if not shapes:
        bounds = [0.0, 0.0, 0.0, 0.0]
    x0, y0 = bounds[0] - MARGIN, bounds[1] - MARGIN
    width, height = bounds[2] - bounds[0] + 2 * MARGIN, bounds[3] - bounds[1] + 2 * MARGIN
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}" '
        f'width="{_fmt(width)}" height="{_fmt(height)}">\n'
    )
    return head + "".join(f"  {s}\n" for s in shapes) + "</svg>\n"


def render_svg(g: Graph) -> str:
    return emit_svg(layout(g))
