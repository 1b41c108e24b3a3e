"""Sentence and document scores built on the corpus term-frequency index.

Per sentence: s1 weights the summed corpus frequencies of its nouns by the
noun density t_n/w_n; s2 sums the frequencies of the nouns inside the
grammatical subject.  Both are normalized per document against the best
sentence to SW and SuW on a 0..100 scale, and rank = SW + SuW drives
selection.  The document mean of s1 measures resourcefulness.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .corpus import CorpusSource, TermFrequencyIndex, iter_corpus_sentences
from .errors import DegenerateInput
from .extraction import FlatDocument
from .linguistic import TaggedSentence, TaggerHandle, extract_subject


@dataclass(frozen=True)
class ScoredSentence:
    """Scores of one sentence; defaults allow synthetic construction.

    first_word is the case-folded first token, kept for the connective
    back-reference rule; it is empty for synthetic sentences, which makes
    the rule inert.
    """

    position: int
    sw: float
    suw: float
    s1: float = 0.0
    s2: float = 0.0
    t_n: int = 0
    w_n: int = 1
    paragraph: int = 0
    first_word: str = ""

    @property
    def rank(self) -> float:
        return self.sw + self.suw


@dataclass(frozen=True)
class DocumentScore:
    """All sentence scores of one document plus its normalization maxima."""

    doc_id: str
    sentences: tuple[ScoredSentence, ...]
    mean: float
    max_s1: float
    max_s2: float

    def __post_init__(self) -> None:
        if not self.sentences:
            raise DegenerateInput(f"document {self.doc_id!r} has no sentences")


def sentence_term_sum(tagged: TaggedSentence, index: TermFrequencyIndex) -> float:
    """Sum of index frequencies over the sentence's noun occurrences."""
    return sum(index.lookup(word) for word in tagged.term_words())


def sentence_weight(t_n: int, w_n: int, term_sum: float) -> float:
    """Unnormalized sentence weight s1 = (t_n / w_n) * term_sum."""
    if w_n < 1:
        raise DegenerateInput("sentence has no tokens")
    if not 0 <= t_n <= w_n:
        raise DegenerateInput(f"term count {t_n} outside [0, {w_n}]")
    return t_n / w_n * term_sum


def subject_weight(tagged: TaggedSentence, index: TermFrequencyIndex) -> float:
    """Unnormalized subject weight s2; 0.0 when the subject is absent."""
    return sum(index.lookup(word) for word in tagged.subject_term_words())


def tag_document(doc: FlatDocument, tagger: TaggerHandle) -> list[TaggedSentence]:
    """Tag every sentence and identify its subject, in document order."""
    return [
        extract_subject(tagger.tag_sentence(sentence))
        for sentence in doc.sentences()
    ]


def score_tagged(
    doc_id: str,
    tagged: Sequence[TaggedSentence],
    index: TermFrequencyIndex,
    paragraphs: Sequence[int] | None = None,
) -> DocumentScore:
    """Score already-tagged sentences.

    Normalization is per document: sw = 100 * s1 / max s1 and analogously
    for suw, with 0 substituted when the respective maximum is 0.
    """
    if not tagged:
        raise DegenerateInput(f"document {doc_id!r} has no sentences")
    if paragraphs is None:
        paragraphs = [0] * len(tagged)
    s1s: list[float] = []
    s2s: list[float] = []
    for sentence in tagged:
        t_n = len(sentence.terms)
        w_n = len(sentence.tokens)
        s1s.append(sentence_weight(t_n, w_n, sentence_term_sum(sentence, index)))
        s2s.append(subject_weight(sentence, index))
    max_s1 = max(s1s)
    max_s2 = max(s2s)
    scored = tuple(
        ScoredSentence(
            position=i,
            # Divide before scaling so the maximal sentence lands on
            # exactly 100.0 (x / x is exact; 100 * x may round first).
            sw=100 * (s1s[i] / max_s1) if max_s1 > 0 else 0.0,
            suw=100 * (s2s[i] / max_s2) if max_s2 > 0 else 0.0,
            s1=s1s[i],
            s2=s2s[i],
            t_n=len(tagged[i].terms),
            w_n=len(tagged[i].tokens),
            paragraph=paragraphs[i],
            first_word=tagged[i].tokens[0].text.lower(),
        )
        for i in range(len(tagged))
    )
    return DocumentScore(
        doc_id=doc_id,
        sentences=scored,
        mean=sum(s1s) / len(s1s),
        max_s1=max_s1,
        max_s2=max_s2,
    )


def score_document(
    doc: FlatDocument, index: TermFrequencyIndex, tagger: TaggerHandle
) -> DocumentScore:
    """Tag, subject-extract, and score a whole document."""
    return score_tagged(
        doc.id, tag_document(doc, tagger), index, doc.sentence_paragraphs()
    )


def document_mean(score: DocumentScore) -> float:
    """Arithmetic mean of s1 over the document's sentences."""
    return score.mean


def score_corpus(
    source: CorpusSource,
    index: TermFrequencyIndex,
    tagger: TaggerHandle,
    *,
    strict_period: bool = False,
    doc_id: str = "corpus",
) -> DocumentScore:
    """Score the whole corpus as if it were one document.

    This yields the corpus mean that candidate documents are compared
    against when ranking their resourcefulness.
    """
    sentences = list(
        iter_corpus_sentences(source, tagger, strict_period=strict_period)
    )
    if not sentences:
        raise DegenerateInput("corpus has no sentences to score")
    tagged = [extract_subject(tagger.tag_sentence(s)) for s in sentences]
    return score_tagged(doc_id, tagged, index)
