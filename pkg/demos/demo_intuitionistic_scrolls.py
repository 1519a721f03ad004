"""The intuitionistic dialect: scrolls as implication and disjunction,
loop handling, and the one-way passage to the classical encoding."""

from peirce import (
    Detach,
    Dialect,
    LoopAdd,
    Path,
    ScrollWrap,
    System,
    apply_rule,
    entails,
    graph_to_formula,
    parse_formula,
    parse_graph,
    print_formula,
    print_graph,
)

I = Dialect.INTUITIONISTIC


def main():
    print("A scroll is two cuts glued at a point.  Written [g0 | g1], the")
    print("outer area g0 holds the antecedent, the loop g1 the consequent:\n")

    for text in ["[p | q]", "[ | p | q]", "(p)", "()"]:
        g = parse_graph(text, I)
        print(f"   {text:14} reads as  {print_formula(graph_to_formula(g))}")

    print("\nDetaching pulls the glued loop apart into discrete nested cuts:")
    g = parse_graph("[p | q]", I)
    detached = apply_rule(System.INTUITIONISTIC, g, Detach(Path.parse("0")))
    print(f"   {print_graph(g)}  =>  {print_graph(detached)}")

    imp = parse_formula("p -> q")
    neg = parse_formula("~(p & ~q)")
    print(f"\n   {print_formula(imp)}  entails  {print_formula(neg)}:",
          entails(I, imp, neg))
    print(f"   {print_formula(neg)}  entails  {print_formula(imp)}:",
          entails(I, neg, imp))
    print("   ... so the passage is one-way, as it should be.")

    print("\nEx falso, with a loop added to the empty cut:")
    bottom = parse_graph("()", I)
    out = apply_rule(System.INTUITIONISTIC, bottom,
                     LoopAdd(Path.parse("0"), parse_graph("q", I)))
    print(f"   {print_graph(bottom)}  =>  {print_graph(out)}   "
          f"({print_formula(graph_to_formula(bottom))} => "
          f"{print_formula(graph_to_formula(out))})")

    print("\nWrapping is the intuitionistic stand-in for the double cut;")
    g = parse_graph("p q", I)
    wrapped = apply_rule(System.INTUITIONISTIC, g, ScrollWrap(Path(), frozenset({0, 1})))
    print(f"   {print_graph(g)}  <=>  {print_graph(wrapped)}   (both ways, any area)")


if __name__ == "__main__":
    main()
