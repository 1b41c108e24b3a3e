"""Tokenization, part-of-speech tagging, and subject detection.

The builtin tagger is a lexicon lookup with suffix fallbacks, in the spirit
of rule-based taggers: it never fails on unknown words and always returns a
tag from a closed Penn-style tagset.  Pretagged input (word_TAG tokens)
bypasses it entirely and the given tags are kept verbatim; tags outside the
builtin tagset simply never match the noun or verb sets downstream.
"""

from __future__ import annotations

import dataclasses
import importlib.resources
import re
from dataclasses import dataclass

from .errors import FormatError, PretaggedFormatError, TaggerFailure

NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
PRIMARY_VERB_TAGS = frozenset({"VB", "VBZ", "VBP", "VBD", "MD"})
FALLBACK_VERB_TAGS = frozenset({"VBG", "VBN"})

_OPEN_PUNCT = "([{\""
_CLOSE_PUNCT = ".,;:!?)]}\""
_QUOTE_PAIR = "\"'"
_NUMBER = re.compile(r"[+-]?\d+(?:[.,]\d+)*%?")


@dataclass(frozen=True)
class Token:
    """One token with its part-of-speech tag."""

    text: str
    tag: str

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("empty token text")

    @property
    def is_noun(self) -> bool:
        return self.tag in NOUN_TAGS


@dataclass(frozen=True)
class TaggedSentence:
    """A tagged sentence, optionally with its subject span identified.

    The subject, when present, is a half-open token index range (start, end)
    lying strictly left of the first verb token.
    """

    tokens: tuple[Token, ...]
    subject: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if not self.tokens:
            raise ValueError("TaggedSentence needs at least one token")
        if self.subject is not None:
            start, end = self.subject
            if not 0 <= start < end <= len(self.tokens):
                raise ValueError(f"subject span {self.subject} out of range")

    @property
    def terms(self) -> tuple[int, ...]:
        """Indices of noun-tagged tokens, ascending."""
        return tuple(i for i, tok in enumerate(self.tokens) if tok.is_noun)

    @property
    def words(self) -> list[str]:
        return [tok.text for tok in self.tokens]

    def term_words(self) -> list[str]:
        """Case-folded texts of the noun tokens, one per occurrence."""
        return [tok.text.lower() for tok in self.tokens if tok.is_noun]

    def subject_term_words(self) -> list[str]:
        """Case-folded noun texts inside the subject span; empty if absent."""
        if self.subject is None:
            return []
        start, end = self.subject
        return [
            tok.text.lower() for tok in self.tokens[start:end] if tok.is_noun
        ]

    def to_pretagged(self) -> str:
        """Render as word_TAG text; reading it back reproduces the tags."""
        return " ".join(f"{tok.text}_{tok.tag}" for tok in self.tokens)


def tokenize(sentence: str) -> list[str]:
    """Split a sentence into word and punctuation tokens.

    Terminal punctuation ``.,;:!?`` and paired quotes or brackets become
    their own tokens; internal hyphens and apostrophes stay attached, so
    possessives and compounds survive as single words.
    """
    tokens: list[str] = []
    for chunk in sentence.split():
        tokens.extend(_split_chunk(chunk))
    return tokens


def _split_chunk(chunk: str) -> list[str]:
    if not chunk:
        return []
    if not any(c.isalnum() for c in chunk):
        return [chunk]
    if len(chunk) >= 2 and chunk[0] == chunk[-1] and chunk[0] in _QUOTE_PAIR:
        return [chunk[0], *_split_chunk(chunk[1:-1]), chunk[-1]]
    lead: list[str] = []
    while chunk and chunk[0] in _OPEN_PUNCT:
        lead.append(chunk[0])
        chunk = chunk[1:]
    trail: list[str] = []
    while chunk and chunk[-1] in _CLOSE_PUNCT:
        trail.append(chunk[-1])
        chunk = chunk[:-1]
    out = lead
    if chunk:
        out.append(chunk)
    out.extend(reversed(trail))
    return out


def detokenize(words: list[str]) -> str:
    """Rebuild readable text from tokens, reattaching punctuation."""
    text = ""
    glue_next = False
    for word in words:
        attach = word != "" and all(
            c in _CLOSE_PUNCT and c != '"' for c in word
        )
        if not text:
            text = word
        elif glue_next or attach:
            text += word
        else:
            text += " " + word
        glue_next = word in ("(", "[", "{")
    return text


def load_lexicon(path=None) -> dict[str, str]:
    """Load a word -> tag lexicon from a two-column TSV.

    Keys are lowercased.  Blank lines and lines starting with '#' are
    skipped; a later entry for the same word overrides an earlier one, so a
    user file can extend a copy of the bundled lexicon.
    """
    if path is None:
        source = importlib.resources.files("corpsum.data").joinpath("lexicon.tsv")
        text = source.read_text(encoding="utf-8")
        name = "bundled lexicon"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        name = str(path)
    lexicon: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise FormatError(f"{name}: line {lineno}: expected word<TAB>tag")
        lexicon[parts[0].lower()] = parts[1]
    if not lexicon:
        raise FormatError(f"{name}: no entries")
    return lexicon


@dataclass(frozen=True)
class TaggerHandle:
    """Tagging strategy: builtin rules over a lexicon, or verbatim input.

    In pretagged mode every input token must be of the form word_TAG and
    sentences arrive one per line, already tokenized.
    """

    mode: str = "builtin"
    lexicon: dict[str, str] | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("builtin", "pretagged"):
            raise ValueError(f"unknown tagger mode {self.mode!r}")
        if self.mode == "builtin" and self.lexicon is None:
            object.__setattr__(self, "lexicon", load_lexicon())

    def tag_sentence(self, sentence: str) -> TaggedSentence:
        """Tokenize (builtin) or split (pretagged) one sentence and tag it."""
        if self.mode == "pretagged":
            return tag(sentence.split(), self)
        return tag(tokenize(sentence), self)


def builtin_tagger(lexicon_path=None) -> TaggerHandle:
    """A builtin-mode handle over the bundled or a user-supplied lexicon."""
    return TaggerHandle(mode="builtin", lexicon=load_lexicon(lexicon_path))


def tag(tokens: list[str], handle: TaggerHandle) -> TaggedSentence:
    """Tag a token list; subject is left unset.

    Builtin mode: lexicon lookup first, then punctuation, number, and
    suffix rules, capitalization (not sentence-initial), default NN.
    Punctuation tokens get the tag "other" so they never count as nouns.
    Pretagged mode: each token must be word_TAG; tags pass through.
    """
    if not tokens:
        raise TaggerFailure("cannot tag an empty sentence")
    if handle.mode == "pretagged":
        return TaggedSentence(tokens=tuple(_parse_pretagged_tokens(tokens)))
    assert handle.lexicon is not None
    return TaggedSentence(
        tokens=tuple(
            Token(word, _tag_word(word, i, handle.lexicon))
            for i, word in enumerate(tokens)
        )
    )


def _tag_word(word: str, position: int, lexicon: dict[str, str]) -> str:
    lower = word.lower()
    tag_ = lexicon.get(lower)
    if tag_ is not None:
        return tag_
    if not any(c.isalnum() for c in word):
        return "other"
    if _NUMBER.fullmatch(word):
        return "CD"
    suffix_tag = _suffix_tag(lower, lexicon)
    if suffix_tag is not None:
        return suffix_tag
    if position > 0 and word[0].isupper():
        return "NNP"
    return "NN"


_NOUN_SUFFIXES = ("tion", "sion", "ness", "ity", "ment", "ance", "ence")


def _suffix_tag(lower: str, lexicon: dict[str, str]) -> str | None:
    if lower.endswith(_NOUN_SUFFIXES):
        return "NN"
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 2:
        singular = lower[:-1]
        if lexicon.get(singular) == "NN" or singular.endswith(_NOUN_SUFFIXES):
            return "NNS"
    if lower.endswith("ed") and len(lower) > 3:
        return "VBD"
    if lower.endswith("ing") and len(lower) > 4:
        return "VBG"
    if lower.endswith("ly") and len(lower) > 3:
        return "RB"
    return None


def _parse_pretagged_tokens(tokens: list[str]) -> list[Token]:
    parsed: list[Token] = []
    for position, item in enumerate(tokens):
        word, sep, tag_ = item.rpartition("_")
        if not sep or not word or not tag_:
            raise PretaggedFormatError(
                f"token {position + 1} ({item!r}) is not of the form word_TAG"
            )
        parsed.append(Token(word, tag_))
    return parsed


def extract_subject(tagged: TaggedSentence) -> TaggedSentence:
    """Return a copy with the grammatical subject span filled in.

    The subject is the longest span of the form NP (PP)* that ends
    immediately before the first verb, where NP is an optional DT, any
    number of JJ, then one or more nouns, and PP is IN followed by an NP.
    Verbs VB, VBZ, VBP, VBD, and MD anchor the search; VBG or VBN counts
    only when no other verb exists.  The subject is absent when there is
    no verb, the verb is first, or no span reaches it.
    """
    tags = [tok.tag for tok in tagged.tokens]
    verb = _first_index(tags, PRIMARY_VERB_TAGS)
    if verb is None:
        verb = _first_index(tags, FALLBACK_VERB_TAGS)
    if verb is None or verb == 0:
        return dataclasses.replace(tagged, subject=None)
    for start in range(verb):
        if _phrase_end(tags, start, verb) == verb:
            return dataclasses.replace(tagged, subject=(start, verb))
    return dataclasses.replace(tagged, subject=None)


def _first_index(tags: list[str], wanted: frozenset[str]) -> int | None:
    for i, tag_ in enumerate(tags):
        if tag_ in wanted:
            return i
    return None


def _phrase_end(tags: list[str], start: int, limit: int) -> int | None:
    end = _noun_phrase_end(tags, start, limit)
    if end is None:
        return None
    while end < limit and tags[end] == "IN":
        extended = _noun_phrase_end(tags, end + 1, limit)
        if extended is None:
            break
        end = extended
    return end


def _noun_phrase_end(tags: list[str], start: int, limit: int) -> int | None:
    i = start
    if i < limit and tags[i] == "DT":
        i += 1
    while i < limit and tags[i] == "JJ":
        i += 1
    first_noun = i
    while i < limit and tags[i] in NOUN_TAGS:
        i += 1
    if i == first_noun:
        return None
    return i
