"""Render a few graphs to SVG files: nested ovals for cuts, internally
tangent loops for scrolls."""

from pathlib import Path

from peirce import Dialect, parse_graph, render_svg

EXAMPLES = {
    "cut": "(p)",
    "double_cut": "((p))",
    "implication_classical": "(p (q))",
    "implication_scroll": "[p | q]",
    "disjunction_scroll": "[ | p | q]",
    "mixed": "(p [q | r s]) t",
}


def main():
    out_dir = Path("rendered")
    out_dir.mkdir(exist_ok=True)
    for name, text in EXAMPLES.items():
        g = parse_graph(text, Dialect.INTUITIONISTIC)
        path = out_dir / f"{name}.svg"
        path.write_text(render_svg(g), encoding="utf-8")
        print(f"   {text:18} -> {path}")
    print("\nLoops touch their scroll's boundary at exactly one point;")
    print("plain nested cuts keep a strictly positive separation.")


if __name__ == "__main__":
    main()
