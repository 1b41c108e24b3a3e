"""
Scoring sentences against the corpus
====================================

"""

# A sentence scores high when it is dense in nouns that the corpus cares
# about. s1 is the raw weight: (nouns / words) times the summed corpus
# frequencies of those nouns. sw rescales s1 so the best sentence in the
# document sits at 100; suw does the same for the subject's nouns alone.
from corpsum import (
    CorpusSource,
    build_index,
    builtin_tagger,
    lines_document,
    rank_documents,
    score_corpus,
    score_document,
)

CORPUS = CorpusSource(documents=(
    ("basics", "A circuit carries current. Voltage drives the current "
               "through the circuit against resistance."),
    ("parts", "Resistors, capacitors, and wires make up the circuit. "
              "Each part sees its own current."),
))

tagger = builtin_tagger()
index = build_index(CORPUS, tagger)

CHATTY = lines_document(
    "The current in a circuit follows the voltage.\n"
    "Resistance limits it.\n"
    "Nobody ever said otherwise.",
    doc_id="chatty",
)
DENSE = lines_document(
    "The circuit voltage drives the current.\n"
    "Every circuit needs a current path.",
    doc_id="dense",
)

score = score_document(DENSE, index, tagger)
print(f"document {score.doc_id!r}, mean s1 = {score.mean:.3f}\n")
print(f"{'pos':>3} {'s1':>8} {'sw':>7} {'suw':>7} {'rank':>8}")
for s in score.sentences:
    print(f"{s.position:>3} {s.s1:>8.3f} {s.sw:>7.2f} {s.suw:>7.2f} {s.rank:>8.2f}")

# A document is only worth summarizing when its mean beats the corpus
# mean; rank_documents applies that test across candidates.
corpus_score = score_corpus(CORPUS, index, tagger)
chatty_score = score_document(CHATTY, index, tagger)
report = rank_documents(corpus_score, [chatty_score, score])
print(f"\ncorpus mean = {report.corpus_mean:.3f}")
for doc_id, mean, delta in report.entries:
    print(f"  {doc_id}: mean {mean:.3f}, delta {delta:+.3f}")
print("chosen:", report.chosen)
