"""Reference summaries from human extracts and system-vs-reference reports.

The reference summary is the set of sentence positions picked by a strict
majority of reviewers.  A system summary is compared to it by overlap,
precision, and recall, plus the mean and sample standard deviation of the
rank values of each summary's sentences.
"""

from __future__ import annotations

import pathlib
import statistics
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .errors import DegenerateInput, EmptyReference, FormatError, RangeError
from .scoring import DocumentScore
from .selection import Summary


@dataclass(frozen=True)
class HumanExtract:
    """One reviewer's chosen sentence positions (0-based)."""

    reviewer: str
    positions: frozenset[int]

    def __post_init__(self) -> None:
        if not self.positions:
            raise ValueError(f"extract {self.reviewer!r} is empty")
        if min(self.positions) < 0:
            raise ValueError(f"extract {self.reviewer!r} has a negative position")


@dataclass(frozen=True)
class EvalReport:
    """Overlap arithmetic between a system summary and the reference.

    Means and SSDs are taken over the rank values of each summary's
    sentences; SSD is the sample standard deviation (divisor n - 1),
    defined as 0 for a single sentence.  The headline performance figure
    is recall.
    """

    overlap: int
    precision: float
    recall: float
    per_reviewer_overlap: Mapping[str, int]
    sys_mean: float
    ref_mean: float
    sys_ssd: float
    ref_ssd: float
    mean_diff: float
    ssd_diff: float

    @property
    def performance(self) -> float:
        return self.recall


def read_extract_file(path) -> HumanExtract:
    """Parse an extract file: one 0-based position per line, '#' comments.

    Duplicates collapse into the set.  The reviewer id is the file name
    without its extension.  Range checking is deferred to evaluation time,
    when the document length is known.
    """
    positions: set[int] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            try:
                value = int(text)
            except ValueError:
                raise FormatError(
                    f"{path}: line {lineno}: expected an integer position"
                ) from None
            if value < 0:
                raise FormatError(f"{path}: line {lineno}: negative position")
            positions.add(value)
    if not positions:
        raise FormatError(f"{path}: extract file has no positions")
    return HumanExtract(
        reviewer=pathlib.Path(path).stem, positions=frozenset(positions)
    )


def build_reference(
    extracts: Sequence[HumanExtract],
    n_sentences: int,
    *,
    majority: int | None = None,
) -> frozenset[int]:
    """Positions chosen by a strict majority of reviewers.

    A position qualifies when strictly more than half of the reviewers
    chose it; an exact half does not.  An explicit majority quorum
    replaces that rule with votes >= majority.
    """
    if not extracts:
        raise DegenerateInput("no extracts given")
    if majority is not None and majority < 1:
        raise DegenerateInput(f"majority threshold {majority} below 1")
    for extract in extracts:
        worst = max(extract.positions)
        if worst >= n_sentences:
            raise RangeError(
                f"extract {extract.reviewer!r} references sentence {worst} "
                f"of a {n_sentences}-sentence document"
            )
    votes: Counter[int] = Counter()
    for extract in extracts:
        votes.update(extract.positions)
    if majority is None:
        reference = {p for p, v in votes.items() if 2 * v > len(extracts)}
    else:
        reference = {p for p, v in votes.items() if v >= majority}
    if not reference:
        raise EmptyReference(
            f"no position was chosen by {majority or 'a majority of'} "
            f"the {len(extracts)} reviewers"
        )
    return frozenset(reference)


def _rank_stats(positions: Iterable[int], rank_of: Mapping[int, float]):
    ranks = [rank_of[p] for p in sorted(positions)]
    mean = statistics.mean(ranks)
    ssd = statistics.stdev(ranks) if len(ranks) > 1 else 0.0
    return mean, ssd


def overlap_report(
    system: Summary,
    reference: frozenset[int],
    extracts: Sequence[HumanExtract],
    scores: DocumentScore,
) -> EvalReport:
    """Compare the system summary against the reference summary."""
    n = len(scores.sentences)
    rank_of = {s.position: s.rank for s in scores.sentences}
    chosen = set(system.selected)
    for name, positions in (("system summary", chosen), ("reference", reference)):
        out = [p for p in positions if p not in rank_of]
        if out:
            raise RangeError(
                f"{name} references sentence {min(out)} of a {n}-sentence document"
            )
    if not reference:
        raise DegenerateInput("reference summary is empty")

    overlap = len(chosen & reference)
    sys_mean, sys_ssd = _rank_stats(chosen, rank_of)
    ref_mean, ref_ssd = _rank_stats(reference, rank_of)
    return EvalReport(
        overlap=overlap,
        precision=overlap / len(chosen),
        recall=overlap / len(reference),
        per_reviewer_overlap={
            e.reviewer: len(chosen & e.positions) for e in extracts
        },
        sys_mean=sys_mean,
        ref_mean=ref_mean,
        sys_ssd=sys_ssd,
        ref_ssd=ref_ssd,
        mean_diff=abs(sys_mean - ref_mean),
        ssd_diff=abs(sys_ssd - ref_ssd),
    )
