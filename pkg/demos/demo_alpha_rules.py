"""A tour of the classical Alpha calculus: the sheet, cuts, and the five
illative transformations, each shown as a checked rewrite."""

from peirce import (
    Dialect,
    DoubleCutElim,
    DoubleCutIntro,
    Erase,
    Insert,
    Iterate,
    Deiterate,
    Path,
    System,
    apply_rule,
    parse_graph,
    print_graph,
)

C = Dialect.CLASSICAL


def show(title, before, rule, system=System.CLASSICAL):
    after = apply_rule(system, before, rule)
    print(f"{title:34} {print_graph(before) or '<blank>':14} =>  {print_graph(after) or '<blank>'}")
    return after


def main():
    print("The blank sheet asserts truth; a cut denies its contents;")
    print("writing two graphs side by side asserts both.\n")

    show("erase in an even area (p^q => p):",
         parse_graph("p q", C), Erase(Path.parse("1")))

    show("insert in an odd area:",
         parse_graph("(p)", C), Insert(Path.parse("0.outer"), parse_graph("q", C)))

    g = show("iterate into a deeper area:",
             parse_graph("p (q)", C), Iterate(Path.parse("0"), Path.parse("1.outer")))

    show("deiterate the copy again:",
         g, Deiterate(Path.parse("1.outer.1"), Path.parse("0")))

    g = show("double cut around p:",
             parse_graph("p", C), DoubleCutIntro(Path(), frozenset({0})))

    show("and back again:",
         g, DoubleCutElim(Path.parse("0")))

    print("\nPolarity is the gatekeeper: erasure needs an even area,")
    print("insertion an odd one, iteration runs toward deeper areas only.")


if __name__ == "__main__":
    main()
