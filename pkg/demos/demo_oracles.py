"""Classical truth tables against the intuitionistic sequent procedure,
with Kripke countermodels for the separating formulas."""

from peirce import kripke_countermodel, parse_formula, taut_classical, taut_int

SEPARATING = [
    "p | ~p",
    "~~p -> p",
    "((p -> q) -> p) -> p",
    "~(p & q) -> (~p | ~q)",
]

BOTH = [
    "p -> p",
    "p -> ~~p",
    "~~(p | ~p)",
    "(~p | ~q) -> ~(p & q)",
    "~(p | q) -> (~p & ~q)",
    "(~p & ~q) -> ~(p | q)",
]


def main():
    print(f"{'formula':28}  classical  intuitionistic")
    for text in SEPARATING + BOTH:
        f = parse_formula(text)
        print(f"{text:28}  {str(taut_classical(f)):9}  {taut_int(f)}")

    print("\nWhere the logics part ways, a small Kripke model tells the story:")
    for text in SEPARATING:
        model = kripke_countermodel(parse_formula(text), 3)
        print(f"   {text:28}  {model}")


if __name__ == "__main__":
    main()
