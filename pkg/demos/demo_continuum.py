"""Ordinal-indexed sequences: lexicographic order, the inversion relation,
and the isomorphism between a monad and the whole space."""

from fractions import Fraction

from peirce import (
    concat,
    elem_domain,
    element,
    extends,
    lex_compare,
    ord_add,
    parse_element,
    parse_ordinal,
    print_element,
    print_ordinal,
    tail,
)


def main():
    print("Ordinal arithmetic below epsilon-0, in Cantor normal form:")
    for a, b in [("w*2+3", "w"), ("1", "w"), ("w", "1"), ("w^2", "w+5")]:
        print(f"   {a} + {b} = {print_ordinal(ord_add(parse_ordinal(a), parse_ordinal(b)))}")

    print("\nElements are piecewise-constant maps from an ordinal domain:")
    x = parse_element("[w:0][1:1]")
    print(f"   {print_element(x)}   has domain {print_ordinal(elem_domain(x))}")
    y = parse_element("[2:5][w:5]")
    print(f"   [2:5][w:5] collapses to {print_element(y)}  (2 + w = w)")

    print("\nLexicographic comparison looks for the first differing position:")
    pairs = [("[1:1][1:2]", "[1:2]"), ("[w:0][1:1]", "[w:0][1:2]"),
             ("[1:3]", "[1:3][1:5]")]
    for a, b in pairs:
        rel = lex_compare(parse_element(a), parse_element(b))
        print(f"   {a:12} vs {b:12} -> {rel.value}")

    print("\nThe inversion relation: x E y when x properly extends y.")
    base = parse_element("[1:3]")
    longer = parse_element("[1:3][w:7]")
    print(f"   {print_element(longer)} E {print_element(base)}:",
          extends(longer, base))

    print("\nEvery monad is a copy of the whole space: tail and concat")
    print("convert between extensions of x and arbitrary elements.")
    z = parse_element("[w:1/2][1:9]")
    up = concat(base, z)
    back = tail(base, up)
    print(f"   concat({print_element(base)}, {print_element(z)}) = {print_element(up)}")
    print(f"   tail back: {print_element(back)}  (round trip exact: {back == z})")

    print("\nDescendants cover the rational possibilities:")
    for q in (Fraction(0), Fraction(1, 2), Fraction(-3, 4)):
        child = concat(base, element((1, q)))
        print(f"   {print_element(child)}  extends {print_element(base)}: "
              f"{extends(child, base)}")


if __name__ == "__main__":
    main()
