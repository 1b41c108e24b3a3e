"""
Selecting and rendering a summary
=================================

"""

# The summary keeps the top-ranked sentences up to a quota (30% of the
# document by default, rounded up). Every sentence tied at the threshold
# is admitted, and a sentence that opens with a connective like "however"
# pulls in its predecessor so the summary does not start mid-thought.
from corpsum import (
    CorpusSource,
    build_index,
    builtin_tagger,
    extract_flat_text,
    render_summary,
    score_document,
    select_summary,
)

CORPUS = CorpusSource(documents=(
    ("glossary", "Voltage, current, and resistance drive every circuit. "
                 "A filter smooths a signal. A capacitor holds charge."),
))

PAGE = """
<p>A low-pass filter keeps the slow part of a signal and drops the fast
part. One resistor and one capacitor are enough to build the filter.</p>
<p>The resistor drives the capacitor, and the capacitor voltage is the
output signal. Fast parts of the signal never reach the capacitor.
However, the filter still holds the signal and the charge.
Engineers accept that cost without much thought.</p>
<p>Pick the resistor and capacitor so their product matches the slowest
signal worth keeping. Everything faster dies away.</p>
"""

tagger = builtin_tagger()
index = build_index(CORPUS, tagger)
doc = extract_flat_text(PAGE, doc_id="lowpass")
score = score_document(doc, index, tagger)

summary = select_summary(score, ratio=0.5)
print(f"quota {summary.quota}, threshold {summary.threshold:.2f}")
print(f"selected positions: {list(summary.selected)}")
print(f"pulled in by a connective: {list(summary.backref_added)}\n")

# The text rendering keeps document order and restores paragraph breaks
# between selected sentences from different paragraphs.
print(render_summary(summary, doc))

# The JSON rendering carries positions, ranks, and the selection
# parameters, and is byte-stable across runs.
print()
print(render_summary(summary, doc, format="json"))
