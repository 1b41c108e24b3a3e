"""HTML to flat text: strip markup, keep paragraph boundaries, split sentences.

The stripper is deliberately tolerant: it scans by pattern instead of building
a parse tree, so unclosed or misnested tags never abort extraction.  Only the
contents of ``<script>``, ``<style>``, and comments are discarded outright;
every other tag is removed and its text kept.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyDocument

_COMMENT = re.compile(r"<!--.*?(?:-->|$)", re.DOTALL)
_INVISIBLE = re.compile(
    r"<(script|style)\b[^>]*>.*?(?:</\1\s*>|$)", re.IGNORECASE | re.DOTALL
)
_LINE_BREAK = re.compile(r"<br\b[^>]*/?>", re.IGNORECASE)

# Tags that end a paragraph.  <p> is the canonical one; the other block-level
# containers are included so that stripping them does not glue unrelated text.
_BLOCK_NAMES = (
    "p|div|li|ul|ol|dl|dt|dd|h[1-6]|table|thead|tbody|tfoot|tr|td|th|"
    "blockquote|pre|section|article|aside|header|footer|figure|figcaption|"
    "nav|main|form|fieldset|hr|title"
)
_BLOCK_BREAK = re.compile(rf"</?(?:{_BLOCK_NAMES})\b[^>]*>", re.IGNORECASE)
_P_BREAK = re.compile(r"</?p\b[^>]*>", re.IGNORECASE)
_ANY_TAG = re.compile(r"<[^>]*>|<[^>]*$")
_BLANK_LINE = re.compile(r"\n[ \t\r]*\n")
_PARA_MARK = "\x00"

# Decoded after tag stripping so "&lt;p&gt;" stays literal text.  &amp; must
# come last or it would re-introduce the other entities.
_ENTITIES = (
    ("&lt;", "<"),
    ("&gt;", ">"),
    ("&quot;", '"'),
    ("&apos;", "'"),
    ("&#39;", "'"),
    ("&nbsp;", " "),
    ("&#160;", " "),
    ("&amp;", "&"),
)

_TERMINATOR = re.compile(r"([.?!]+)(?=\s|$)")
_WORD_BEFORE = re.compile(r"(\S+)$")


@dataclass(frozen=True)
class FlatDocument:
    """Ordered paragraphs of ordered sentences from one source document."""

    id: str
    paragraphs: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        for para in self.paragraphs:
            for sentence in para:
                if not sentence.strip():
                    raise ValueError("blank sentence in FlatDocument")

    def sentences(self) -> list[str]:
        """All sentences in document order (global 0-based positions)."""
        return [s for para in self.paragraphs for s in para]

    def sentence_paragraphs(self) -> list[int]:
        """Paragraph index of each sentence, aligned with sentences()."""
        return [i for i, para in enumerate(self.paragraphs) for _ in para]

    @property
    def n_sentences(self) -> int:
        return sum(len(para) for para in self.paragraphs)


def split_sentences(paragraph: str, *, strict_period: bool = False) -> list[str]:
    """Split flat paragraph text into sentences, keeping their terminators.

    Default behaviour splits at runs of ``.``, ``?`` or ``!`` followed by
    whitespace or end of text.  A period after a lone uppercase letter (an
    initial) does not split, and neither does a period between digits (a
    decimal; also never a candidate because the terminator must be followed
    by whitespace).  With strict_period=True the text splits at every ``.``
    and nothing else.
    """
    text = paragraph.strip()
    if not text:
        return []
    if strict_period:
        return _split_every_period(text)

    sentences: list[str] = []
    start = 0
    for match in _TERMINATOR.finditer(text):
        if _guarded(text, match.start(1), match.end(1)):
            continue
        piece = text[start : match.end(1)].strip()
        if piece:
            sentences.append(piece)
        start = match.end(1)
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _guarded(text: str, punct_start: int, punct_end: int) -> bool:
    if text[punct_start:punct_end] != ".":
        return False
    before = _WORD_BEFORE.search(text, 0, punct_start)
    if before is not None:
        word = before.group(1)
        if len(word) == 1 and word.isalpha() and word.isupper():
            return True
    if (
        punct_start > 0
        and punct_end < len(text)
        and text[punct_start - 1].isdigit()
        and text[punct_end].isdigit()
    ):
        return True
    return False


def _split_every_period(text: str) -> list[str]:
    out: list[str] = []
    start = 0
    for i, ch in enumerate(text):
        if ch == ".":
            piece = text[start : i + 1].strip()
            if piece:
                out.append(piece)
            start = i + 1
    tail = text[start:].strip()
    if tail:
        out.append(tail)
    return out


def extract_flat_text(
    html: str,
    *,
    doc_id: str = "doc",
    p_only: bool = False,
    strict_period: bool = False,
) -> FlatDocument:
    """Convert an HTML (or already-flat) document to a FlatDocument.

    Paragraph boundaries come from ``<p>`` tags (plus other block-level tags
    unless p_only=True) and from blank lines, which makes the function a
    no-op on its own plain-text rendering and lets it ingest .txt files.
    """
    text = _COMMENT.sub("", html)
    text = _INVISIBLE.sub(" ", text)
    text = _LINE_BREAK.sub(" ", text)
    breaker = _P_BREAK if p_only else _BLOCK_BREAK
    text = breaker.sub(_PARA_MARK, text)
    text = _ANY_TAG.sub("", text)
    for entity, char in _ENTITIES:
        text = text.replace(entity, char)

    paragraphs: list[tuple[str, ...]] = []
    for chunk in text.split(_PARA_MARK):
        for block in _BLANK_LINE.split(chunk):
            flat = " ".join(block.split())
            if not flat:
                continue
            sentences = split_sentences(flat, strict_period=strict_period)
            if sentences:
                paragraphs.append(tuple(sentences))
    if not paragraphs:
        raise EmptyDocument(f"no visible text in document {doc_id!r}")
    return FlatDocument(id=doc_id, paragraphs=tuple(paragraphs))


def lines_document(text: str, *, doc_id: str = "doc") -> FlatDocument:
    """Build a FlatDocument treating every non-blank line as one sentence.

    Blank lines separate paragraphs.  Used for sentence-per-line corpus
    files and for pretagged word_TAG input.
    """
    paragraphs: list[tuple[str, ...]] = []
    current: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            current.append(line)
        elif current:
            paragraphs.append(tuple(current))
            current = []
    if current:
        paragraphs.append(tuple(current))
    if not paragraphs:
        raise EmptyDocument(f"no lines in document {doc_id!r}")
    return FlatDocument(id=doc_id, paragraphs=tuple(paragraphs))
