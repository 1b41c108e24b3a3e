"""
Judging a summary against human extracts
========================================

"""

# Human reviewers each pick the sentences they would keep. The reference
# summary is the set a strict majority agreed on, and the system summary
# is scored by overlap with it: recall is the headline figure.
from corpsum import (
    CorpusSource,
    HumanExtract,
    build_index,
    build_reference,
    builtin_tagger,
    lines_document,
    overlap_report,
    score_document,
    select_summary,
)

CORPUS = CorpusSource(documents=(
    ("terms", "A battery stores energy. A circuit moves charge. "
              "Current, voltage, and resistance describe the flow."),
))

DOCUMENT = lines_document(
    "A battery pushes charge around the circuit.\n"
    "The push is the voltage of the battery.\n"
    "Chemistry inside sets that voltage.\n"
    "Resistance in the circuit limits the current.\n"
    "Thicker wires lower the resistance.\n"
    "Heat is the price of resistance.",
    doc_id="battery",
)

tagger = builtin_tagger()
index = build_index(CORPUS, tagger)
score = score_document(DOCUMENT, index, tagger)
system = select_summary(score, ratio=0.5)
print("system summary picks:", list(system.selected))

# Three reviewers, two of whom must agree for a sentence to count.
extracts = [
    HumanExtract(reviewer="r1", positions=frozenset({0, 1, 3})),
    HumanExtract(reviewer="r2", positions=frozenset({0, 3, 5})),
    HumanExtract(reviewer="r3", positions=frozenset({1, 3, 4})),
]
reference = build_reference(extracts, len(score.sentences))
print("majority reference:", sorted(reference))

report = overlap_report(system, reference, extracts, score)
print(f"\noverlap {report.overlap}, precision {report.precision:.2%}, "
      f"recall {report.recall:.2%}")
print("per reviewer:", dict(sorted(report.per_reviewer_overlap.items())))

# Mean and sample standard deviation of the rank values show whether the
# two summaries drew from the same quality band.
print(f"rank mean: system {report.sys_mean:.2f} vs reference {report.ref_mean:.2f}")
print(f"rank ssd:  system {report.sys_ssd:.2f} vs reference {report.ref_ssd:.2f}")
