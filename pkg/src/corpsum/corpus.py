"""Corpus ingestion and the normalized noun term-frequency index.

The index maps each case-folded noun occurring anywhere in the corpus to a
frequency normalized so the most frequent noun scores exactly 100.  It is
the only corpus-derived statistic the scoring stage consults.
"""

from __future__ import annotations

import re
import types
from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from .errors import DegenerateInput, EmptyCorpus, EmptyDocument, FormatError
from .extraction import extract_flat_text, lines_document
from .linguistic import TaggerHandle

_HEADER = re.compile(r"# documents=(\d+) noun_tokens=(\d+)")


@dataclass(frozen=True)
class CorpusSource:
    """The reference corpus: ordered (id, text) document pairs.

    With per_line=True every non-blank line of a document is one sentence;
    otherwise documents are flat text split by the extraction rules.
    Pretagged corpora are always read per line.
    """

    documents: tuple[tuple[str, str], ...]
    per_line: bool = False

    def __post_init__(self) -> None:
        if not self.documents:
            raise DegenerateInput("corpus has no documents")
        for doc_id, text in self.documents:
            if not text.strip():
                raise DegenerateInput(f"corpus document {doc_id!r} is empty")


@dataclass(frozen=True)
class TermFrequencyIndex:
    """Immutable map from noun term to normalized frequency in (0, 100].

    entries and raw_counts share keys; tf(t) = 100 * raw_counts[t] divided
    by the maximum raw count, so the most frequent term scores exactly 100.
    Direct construction does not validate that relation (hand-built indexes
    are allowed in tests and tools); build_index and load_index guarantee it.
    """

    entries: Mapping[str, float]
    raw_counts: Mapping[str, int]
    n_documents: int = 0
    n_noun_tokens: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", types.MappingProxyType(dict(self.entries)))
        object.__setattr__(
            self, "raw_counts", types.MappingProxyType(dict(self.raw_counts))
        )

    def lookup(self, term: str) -> float:
        """Normalized frequency of a term, 0.0 when absent; case-folded."""
        return self.entries.get(term.lower(), 0.0)

    def __len__(self) -> int:
        return len(self.entries)


def iter_corpus_sentences(
    source: CorpusSource,
    tagger: TaggerHandle,
    *,
    strict_period: bool = False,
) -> Iterator[str]:
    """Yield every corpus sentence in document order.

    A document whose text yields no sentences contributes nothing; the
    caller decides whether an empty total is an error.
    """
    per_line = source.per_line or tagger.mode == "pretagged"
    for doc_id, text in source.documents:
        try:
            if per_line:
                doc = lines_document(text, doc_id=doc_id)
            else:
                doc = extract_flat_text(
                    text, doc_id=doc_id, strict_period=strict_period
                )
        except EmptyDocument:
            continue
        yield from doc.sentences()


def build_index(
    source: CorpusSource,
    tagger: TaggerHandle,
    *,
    strict_period: bool = False,
) -> TermFrequencyIndex:
    """Count noun tokens across the corpus and normalize to a max of 100.

    Counting is per occurrence (a noun repeated in one sentence counts
    each time) over case-folded token texts; tags NN, NNS, NNP, and NNPS
    count as nouns.  No stemming or stopword removal is applied.
    """
    counts: Counter[str] = Counter()
    n_sentences = 0
    for sentence in iter_corpus_sentences(
        source, tagger, strict_period=strict_period
    ):
        n_sentences += 1
        counts.update(tagger.tag_sentence(sentence).term_words())
    if n_sentences == 0:
        raise EmptyCorpus("no sentences survived extraction")
    if not counts:
        raise EmptyCorpus("corpus contains no noun terms")
    max_count = max(counts.values())
    entries = {term: 100 * count / max_count for term, count in counts.items()}
    return TermFrequencyIndex(
        entries=entries,
        raw_counts=dict(counts),
        n_documents=len(source.documents),
        n_noun_tokens=sum(counts.values()),
    )


def save_index(index: TermFrequencyIndex, path) -> None:
    """Write the index as TSV: term, tf, raw count; tf descending.

    Ties on tf fall back to term ascending, and tf values use the shortest
    float representation that round-trips, so identical indexes produce
    byte-identical files.
    """
    lines = [f"# documents={index.n_documents} noun_tokens={index.n_noun_tokens}"]
    for term in sorted(index.entries, key=lambda t: (-index.entries[t], t)):
        lines.append(f"{term}\t{index.entries[term]!r}\t{index.raw_counts[term]}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def load_index(path) -> TermFrequencyIndex:
    """Read an index TSV back, validating format and normalization.

    Rejected with FormatError: missing or malformed header, wrong column
    count, non-numeric fields, duplicate terms, counts below 1, any tf
    outside (0, 100], a maximum tf different from 100 by more than 1e-9,
    any tf inconsistent with its raw count by more than 1e-9, or a header
    token total that does not match the counts.
    """
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise FormatError(f"{path}: empty index file")
    header = _HEADER.fullmatch(lines[0].strip())
    if header is None:
        raise FormatError(
            f"{path}: line 1: expected header '# documents=N noun_tokens=M'"
        )
    n_documents, n_noun_tokens = int(header.group(1)), int(header.group(2))

    entries: dict[str, float] = {}
    raw_counts: dict[str, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3 or not parts[0]:
            raise FormatError(f"{path}: line {lineno}: expected term<TAB>tf<TAB>count")
        term = parts[0]
        if term in entries:
            raise FormatError(f"{path}: line {lineno}: duplicate term {term!r}")
        try:
            tf = float(parts[1])
            count = int(parts[2])
        except ValueError as exc:
            raise FormatError(f"{path}: line {lineno}: {exc}") from None
        if count < 1:
            raise FormatError(f"{path}: line {lineno}: count must be >= 1")
        if not 0.0 < tf <= 100.0:
            raise FormatError(f"{path}: line {lineno}: tf out of (0, 100]")
        entries[term] = tf
        raw_counts[term] = count

    if not entries:
        raise FormatError(f"{path}: index has no terms")
    if abs(max(entries.values()) - 100.0) > 1e-9:
        raise FormatError(f"{path}: maximum tf is not 100.0")
    max_count = max(raw_counts.values())
    for term, tf in entries.items():
        if abs(tf - 100 * raw_counts[term] / max_count) > 1e-9:
            raise FormatError(f"{path}: tf of {term!r} inconsistent with its count")
    if sum(raw_counts.values()) != n_noun_tokens:
        raise FormatError(f"{path}: header noun_tokens does not match the entries")
    return TermFrequencyIndex(
        entries=entries,
        raw_counts=raw_counts,
        n_documents=n_documents,
        n_noun_tokens=n_noun_tokens,
    )
