"""Proof-script files: a checked derivation, an expectation mismatch, and
a polarity violation, each reported step by step."""

from peirce import check_script, parse_script, print_graph

GOOD = """\
# modus-ponens-flavoured bookkeeping on the sheet
system classical
graph p (p (q))
iterate 0 -> 1.outer
expect p (p p (q))
deiterate 1.outer.0 witness 0
expect p (p (q))
"""

MISMATCH = """\
system classical
graph p q
erase 0
expect p
"""

ILLEGAL = """\
system classical
graph (p q)
erase 0.outer.1
"""


def show(title, text):
    print(f"== {title}")
    report = check_script(parse_script(text))
    for step in report.results:
        if step.error is None:
            print(f"   step {step.index}: ok -> {print_graph(step.graph)}")
        else:
            print(f"   step {step.index}: FAILED ({step.error})")
    if report.ok:
        print(f"   valid; final graph: {print_graph(report.final)}\n")
    else:
        print(f"   invalid at step {report.failed_step}: {report.reason}\n")


def main():
    show("a valid script with expectations", GOOD)
    show("an index slip caught by expect", MISMATCH)
    show("erasure attempted in an odd area", ILLEGAL)


if __name__ == "__main__":
    main()
