"""Corpus-referenced extractive summarizer for single web documents.

The pipeline: build a noun term-frequency index from a reference corpus,
flatten an HTML document to sentences, tag and subject-chunk each sentence,
score sentences by corpus statistics (Sentence Weight) and subject nouns
(Subject Weight), select the top share by rank plus connective-linked
predecessors, and evaluate against majority-vote human references.
"""

from .corpus import (
    CorpusSource,
    TermFrequencyIndex,
    build_index,
    load_index,
    save_index,
)
from .errors import (
    CorpsumError,
    DegenerateInput,
    EmptyCorpus,
    EmptyDocument,
    EmptyReference,
    FormatError,
    PositionOutOfRange,
    PretaggedFormatError,
    RangeError,
    TaggerFailure,
)
from .evaluation import (
    EvalReport,
    HumanExtract,
    build_reference,
    overlap_report,
    read_extract_file,
)
from .extraction import FlatDocument, extract_flat_text, lines_document, split_sentences
from .linguistic import (
    TaggedSentence,
    TaggerHandle,
    Token,
    builtin_tagger,
    detokenize,
    extract_subject,
    load_lexicon,
    tag,
    tokenize,
)
from .scoring import (
    DocumentScore,
    ScoredSentence,
    document_mean,
    score_corpus,
    score_document,
    score_tagged,
    sentence_term_sum,
    sentence_weight,
    subject_weight,
    tag_document,
)
from .selection import (
    DEFAULT_BACKREF_FACTOR,
    DEFAULT_CONNECTIVES,
    DEFAULT_RATIO,
    ResourcefulnessReport,
    Summary,
    compute_quota,
    load_connectives,
    rank_documents,
    render_summary,
    select_summary,
)

__version__ = "0.1.0"

__all__ = [
    "CorpusSource",
    "TermFrequencyIndex",
    "build_index",
    "load_index",
    "save_index",
    "CorpsumError",
    "DegenerateInput",
    "EmptyCorpus",
    "EmptyDocument",
    "EmptyReference",
    "FormatError",
    "PositionOutOfRange",
    "PretaggedFormatError",
    "RangeError",
    "TaggerFailure",
    "EvalReport",
    "HumanExtract",
    "build_reference",
    "overlap_report",
    "read_extract_file",
    "FlatDocument",
    "extract_flat_text",
    "lines_document",
    "split_sentences",
    "TaggedSentence",
    "TaggerHandle",
    "Token",
    "builtin_tagger",
    "detokenize",
    "extract_subject",
    "load_lexicon",
    "tag",
    "tokenize",
    "DocumentScore",
    "ScoredSentence",
    "document_mean",
    "score_corpus",
    "score_document",
    "score_tagged",
    "sentence_term_sum",
    "sentence_weight",
    "subject_weight",
    "tag_document",
    "DEFAULT_BACKREF_FACTOR",
    "DEFAULT_CONNECTIVES",
    "DEFAULT_RATIO",
    "ResourcefulnessReport",
    "Summary",
    "compute_quota",
    "load_connectives",
    "rank_documents",
    "render_summary",
    "select_summary",
    "__version__",
]
