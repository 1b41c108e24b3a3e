"""
Building a term-frequency index from a corpus
=============================================

"""

import tempfile
from pathlib import Path

# A corpus is any collection of (id, text) pairs on one topic. The index
# records how often each noun occurs, scaled so the most frequent noun
# sits at 100 and everything else is relative to it.
from corpsum import CorpusSource, build_index, builtin_tagger, load_index, save_index

DOCUMENTS = (
    (
        "ohms-law",
        "Ohm's law connects voltage to current. The resistance of the "
        "wire decides how much current a given voltage drives. Raise the "
        "voltage and the current doubles with it.",
    ),
    (
        "series",
        "Resistors in series carry one current. The total resistance is "
        "the sum of the parts, so the current drops as resistors are "
        "added. The voltage divides across them in proportion.",
    ),
    (
        "parallel",
        "Resistors in parallel all see one voltage. Each branch draws "
        "its own current, and the currents join at the node. Adding "
        "branches drops the total resistance.",
    ),
)

# The builtin tagger finds the nouns; only nouns enter the index.
tagger = builtin_tagger()
index = build_index(CorpusSource(documents=DOCUMENTS), tagger)

print(f"{len(index)} noun terms from {index.n_documents} documents "
      f"({index.n_noun_tokens} noun occurrences)\n")

# The most frequent noun defines the scale: its tf is exactly 100.
print(f"{'term':<12} {'tf':>8}  count")
for term in sorted(index.entries, key=index.entries.get, reverse=True):
    print(f"{term:<12} {index.entries[term]:>8.3f}  {index.raw_counts[term]}")

# An index saved to TSV loads back bit for bit, so a corpus scanned once
# can serve every later summarization run.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "index.tsv"
    save_index(index, path)
    reloaded = load_index(path)
    assert dict(reloaded.entries) == dict(index.entries)
    print(f"\nsaved and reloaded {len(reloaded)} terms unchanged")
