"""Document choice by resourcefulness and summary assembly.

A document is worth summarizing when its mean sentence weight exceeds the
corpus mean.  The summary takes the top-ranked sentences up to a quota
(default 30% of the document, rounded up), admits every sentence tied at
the threshold, then adds the predecessor of any selected sentence that
opens with a connective, provided the predecessor ranks at least 70% as
high.  Output is always in document order.
"""

from __future__ import annotations

import json
import math
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DegenerateInput, PositionOutOfRange
from .extraction import FlatDocument
from .scoring import DocumentScore

DEFAULT_RATIO = 0.30
DEFAULT_BACKREF_FACTOR = 0.70
DEFAULT_CONNECTIVES = frozenset(
    {
        "such", "beyond", "although", "however", "moreover",
        "also", "this", "these", "those", "that",
    }
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class ResourcefulnessReport:
    """Document means versus the corpus mean.

    entries holds (doc id, mean, delta) in input order; chosen is the id
    with the largest positive delta (ties broken by ascending id), or None
    when no document beats the corpus mean.
    """

    corpus_mean: float
    entries: tuple[tuple[str, float, float], ...]
    chosen: str | None


@dataclass(frozen=True)
class Summary:
    """Selected sentence positions of one document, ascending.

    ranks holds the rank of each selected sentence, aligned with selected;
    backref_added lists the positions contributed by the connective rule.
    """

    doc_id: str
    selected: tuple[int, ...]
    threshold: float
    quota: int
    backref_added: tuple[int, ...]
    ranks: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.selected:
            raise ValueError("summary selects no sentences")
        if any(b >= a for a, b in zip(self.selected[1:], self.selected)):
            raise ValueError("selected positions must be strictly ascending")
        if self.selected[0] < 0:
            raise ValueError("negative sentence position")
        if len(self.ranks) != len(self.selected):
            raise ValueError("ranks must align with selected positions")
        if not set(self.backref_added) <= set(self.selected):
            raise ValueError("backref_added must be a subset of selected")


def rank_documents(
    corpus_score: DocumentScore, doc_scores: Sequence[DocumentScore]
) -> ResourcefulnessReport:
    """Compare document means to the corpus mean and pick the best.

    chosen is the document with the maximum positive delta; ties go to the
    lexicographically lower id; None when every delta is <= 0.
    """
    if not doc_scores:
        raise DegenerateInput("no candidate documents to rank")
    corpus_mean = corpus_score.mean
    entries = tuple(
        (score.doc_id, score.mean, score.mean - corpus_mean)
        for score in doc_scores
    )
    chosen: str | None = None
    best = 0.0
    for doc_id, _, delta in entries:
        if delta > 0 and (
            chosen is None or delta > best or (delta == best and doc_id < chosen)
        ):
            chosen, best = doc_id, delta
    return ResourcefulnessReport(
        corpus_mean=corpus_mean, entries=entries, chosen=chosen
    )


def compute_quota(n_sentences: int, ratio: float) -> int:
    """Ceiling of n_sentences * ratio, clamped to [1, n_sentences].

    The product is nudged down by 1e-9 before the ceiling so that binary
    artifacts like 10 * 0.3 = 3.0000000000000004 still yield 3.
    """
    if n_sentences < 1:
        raise DegenerateInput("document has no sentences")
    if not 0 < ratio <= 1:
        raise DegenerateInput(f"ratio {ratio} outside (0, 1]")
    quota = math.ceil(n_sentences * ratio - 1e-9)
    return max(1, min(quota, n_sentences))


def select_summary(
    score: DocumentScore,
    quota: int | None = None,
    *,
    ratio: float = DEFAULT_RATIO,
    connectives: frozenset[str] = DEFAULT_CONNECTIVES,
    backref_factor: float = DEFAULT_BACKREF_FACTOR,
) -> Summary:
    """Select the summary sentences of a scored document.

    The threshold is the rank of the quota-th sentence in descending rank
    order; every sentence at or above it is selected, so ties can exceed
    the quota.  Then, in one non-recursive pass in document order, each
    selected sentence that begins with a connective pulls in its immediate
    predecessor when that predecessor's rank is at least backref_factor
    times its own; such additions do not count against the quota.
    """
    if not 0 < backref_factor <= 1:
        raise DegenerateInput(f"backref factor {backref_factor} outside (0, 1]")
    n = len(score.sentences)
    if quota is None:
        quota = compute_quota(n, ratio)
    if quota < 1:
        raise DegenerateInput(f"quota {quota} below 1")
    quota = min(quota, n)

    ranks = [s.rank for s in score.sentences]
    threshold = sorted(ranks, reverse=True)[quota - 1]
    base = [i for i in range(n) if ranks[i] >= threshold]
    selected = set(base)
    backref: list[int] = []
    for i in base:
        starts_connective = score.sentences[i].first_word in connectives
        if i > 0 and starts_connective and i - 1 not in selected:
            if ranks[i - 1] >= backref_factor * ranks[i]:
                selected.add(i - 1)
                backref.append(i - 1)
    positions = tuple(sorted(selected))
    return Summary(
        doc_id=score.doc_id,
        selected=positions,
        threshold=threshold,
        quota=quota,
        backref_added=tuple(sorted(backref)),
        ranks=tuple(ranks[p] for p in positions),
    )


def load_connectives(path) -> frozenset[str]:
    """Read a connective list, one word per line; replaces the default."""
    with open(path, encoding="utf-8") as fh:
        words = {
            line.strip().lower()
            for line in fh
            if line.strip() and not line.startswith("#")
        }
    if not words:
        raise DegenerateInput(f"{path}: no connective words")
    return frozenset(words)


def render_summary(summary: Summary, doc: FlatDocument, format: str = "text") -> str:
    """Render selected sentences as text or JSON.

    Text output joins sentences in document order with paragraph breaks
    restored between sentences from different source paragraphs.  JSON
    output carries positions, ranks, texts, threshold, quota, and the
    back-reference additions.
    """
    sentences = doc.sentences()
    paragraphs = doc.sentence_paragraphs()
    for position in summary.selected:
        if position >= len(sentences):
            raise PositionOutOfRange(
                f"position {position} beyond document length {len(sentences)}"
            )
    if format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "doc": summary.doc_id,
            "quota": summary.quota,
            "threshold": summary.threshold,
            "positions": list(summary.selected),
            "backref_added": list(summary.backref_added),
            "sentences": [
                {"position": p, "rank": r, "text": sentences[p]}
                for p, r in zip(summary.selected, summary.ranks)
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True)
    if format != "text":
        raise DegenerateInput(f"unknown format {format!r}")
    pieces: list[str] = []
    for i, position in enumerate(summary.selected):
        if i == 0:
            pieces.append(sentences[position])
        elif paragraphs[position] != paragraphs[summary.selected[i - 1]]:
            pieces.append("\n\n" + sentences[position])
        else:
            pieces.append(" " + sentences[position])
    return "".join(pieces)
