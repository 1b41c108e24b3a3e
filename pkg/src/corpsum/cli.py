"""Command-line pipeline: corpsum build-corpus | rank-docs | summarize |
evaluate, plus extract and score debug commands.

Exit status 0 means the requested artifact was fully produced; 2 is an
empty corpus; 64 a usage error; 1 any other failure.  Nothing here consults
randomness or time, so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import pathlib
import sys
from dataclasses import dataclass

from . import __version__
from .corpus import CorpusSource, build_index, load_index, save_index
from .errors import CorpsumError, DegenerateInput, EmptyCorpus, FormatError
from .extraction import FlatDocument, extract_flat_text, lines_document
from .linguistic import TaggerHandle, detokenize, load_lexicon
from .scoring import (
    DocumentScore,
    ScoredSentence,
    score_corpus,
    score_tagged,
    tag_document,
)
from .selection import (
    DEFAULT_BACKREF_FACTOR,
    DEFAULT_CONNECTIVES,
    DEFAULT_RATIO,
    SCHEMA_VERSION,
    Summary,
    load_connectives,
    rank_documents,
    render_summary,
    select_summary,
)
from .evaluation import build_reference, overlap_report, read_extract_file

EX_OK = 0
EX_EMPTY_CORPUS = 2
EX_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage status on bad arguments."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class Config:
    """Resolved settings; flags beat the config file, which beats these."""

    ratio: float = DEFAULT_RATIO
    backref_factor: float = DEFAULT_BACKREF_FACTOR
    connectives: frozenset[str] = DEFAULT_CONNECTIVES
    tagger: str = "builtin"
    lexicon: str | None = None
    strict_period: bool = False
    p_only: bool = False

    def __post_init__(self) -> None:
        if not 0 < self.ratio <= 1:
            raise DegenerateInput(f"ratio {self.ratio} outside (0, 1]")
        if not 0 < self.backref_factor <= 1:
            raise DegenerateInput(
                f"backref factor {self.backref_factor} outside (0, 1]"
            )


_BOOL_WORDS = {
    "true": True, "yes": True, "on": True, "1": True,
    "false": False, "no": False, "off": False, "0": False,
}


def _parse_config_file(path) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            key, sep, value = text.partition("=")
            if not sep or not key.strip():
                raise FormatError(f"{path}: line {lineno}: expected key=value")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _config_bool(raw: str, key: str, path) -> bool:
    try:
        return _BOOL_WORDS[raw.lower()]
    except KeyError:
        raise FormatError(f"{path}: {key} must be a boolean, not {raw!r}") from None


def _resolve_config(args) -> Config:
    """Merge flags over the optional config file over the defaults."""
    file_values: dict[str, str] = {}
    config_path = getattr(args, "config", None)
    if config_path is not None:
        file_values = _parse_config_file(config_path)
    unknown = set(file_values) - {
        "ratio", "backref_factor", "connectives", "tagger",
        "lexicon", "strict_period", "p_only",
    }
    if unknown:
        raise FormatError(
            f"{config_path}: unknown config keys: {', '.join(sorted(unknown))}"
        )

    def pick(name, convert, default):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in file_values:
            return convert(file_values[name])
        return default

    connectives = pick("connectives", str, None)
    return Config(
        ratio=pick("ratio", float, DEFAULT_RATIO),
        backref_factor=pick("backref_factor", float, DEFAULT_BACKREF_FACTOR),
        connectives=(
            DEFAULT_CONNECTIVES
            if connectives is None
            else load_connectives(connectives)
        ),
        tagger=pick("tagger", str, "builtin"),
        lexicon=pick("lexicon", str, None),
        strict_period=pick(
            "strict_period",
            lambda raw: _config_bool(raw, "strict_period", config_path),
            False,
        ),
        p_only=pick(
            "p_only", lambda raw: _config_bool(raw, "p_only", config_path), False
        ),
    )


def _tagger(config: Config) -> TaggerHandle:
    if config.tagger == "pretagged":
        return TaggerHandle(mode="pretagged")
    return TaggerHandle(mode="builtin", lexicon=load_lexicon(config.lexicon))


def _read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _doc_id(path) -> str:
    return "stdin" if str(path) == "-" else pathlib.Path(path).stem


def _load_document(path, config: Config) -> FlatDocument:
    text = _read_text(path)
    if config.tagger == "pretagged":
        return lines_document(text, doc_id=_doc_id(path))
    return extract_flat_text(
        text,
        doc_id=_doc_id(path),
        p_only=config.p_only,
        strict_period=config.strict_period,
    )


def _corpus_source(path, per_line: bool) -> CorpusSource:
    if str(path) == "-":
        text = sys.stdin.read()
        if not text.strip():
            raise EmptyCorpus("standard input is empty")
        return CorpusSource(documents=(("stdin", text),), per_line=per_line)
    p = pathlib.Path(path)
    if p.is_dir():
        files = sorted(p.glob("*.txt"))
        documents = tuple(
            (f.stem, text)
            for f in files
            if (text := f.read_text(encoding="utf-8")).strip()
        )
        if not documents:
            raise EmptyCorpus(f"no non-empty .txt files in {path}")
        return CorpusSource(documents=documents, per_line=per_line)
    text = p.read_text(encoding="utf-8")
    if not text.strip():
        raise EmptyCorpus(f"{path} is empty")
    return CorpusSource(documents=((p.stem, text),), per_line=per_line)


def _detokenized(doc: FlatDocument, tagged) -> FlatDocument:
    """Replace pretagged word_TAG sentences with readable text."""
    flat = iter(tagged)
    paragraphs = tuple(
        tuple(detokenize(next(flat).words) for _ in para)
        for para in doc.paragraphs
    )
    return dataclasses.replace(doc, paragraphs=paragraphs)


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _scores_payload(score: DocumentScore, tagged, sentences) -> dict:
    records = []
    for scored, tags in zip(score.sentences, tagged):
        records.append(
            {
                "position": scored.position,
                "paragraph": scored.paragraph,
                "text": sentences[scored.position],
                "s1": scored.s1,
                "s2": scored.s2,
                "sw": scored.sw,
                "suw": scored.suw,
                "rank": scored.rank,
                "t_n": scored.t_n,
                "w_n": scored.w_n,
                "first_word": scored.first_word,
                "subject": list(tags.subject) if tags.subject else None,
            }
        )
    return {
        "schema": SCHEMA_VERSION,
        "doc": score.doc_id,
        "mean": score.mean,
        "max_s1": score.max_s1,
        "max_s2": score.max_s2,
        "sentences": records,
    }


def cmd_build_corpus(args) -> int:
    config = _resolve_config(args)
    source = _corpus_source(args.corpus, bool(args.per_line))
    index = build_index(
        source, _tagger(config), strict_period=config.strict_period
    )
    save_index(index, args.output)
    top = sorted(index.raw_counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]
    print(
        f"{len(index)} terms; most frequent noun {top[0]!r} "
        f"({top[1]} occurrences)",
        file=sys.stderr,
    )
    return EX_OK


def cmd_rank_docs(args) -> int:
    config = _resolve_config(args)
    tagger = _tagger(config)
    index = load_index(args.index)
    source = _corpus_source(args.corpus, bool(args.per_line))
    corpus_sc = score_corpus(
        source, index, tagger, strict_period=config.strict_period
    )
    doc_scores = []
    for path in args.docs:
        doc = _load_document(path, config)
        doc_scores.append(
            score_tagged(
                doc.id, tag_document(doc, tagger), index,
                doc.sentence_paragraphs(),
            )
        )
    report = rank_documents(corpus_sc, doc_scores)

    width = max(len("corpus"), *(len(e[0]) for e in report.entries))
    print(f"{'document':<{width}}  {'mean':>10}  {'delta':>10}", file=sys.stderr)
    print(f"{'corpus':<{width}}  {report.corpus_mean:>10.4f}  {'-':>10}",
          file=sys.stderr)
    for doc_id, mean, delta in report.entries:
        marker = "  *chosen*" if doc_id == report.chosen else ""
        print(f"{doc_id:<{width}}  {mean:>10.4f}  {delta:>+10.4f}{marker}",
              file=sys.stderr)
    if report.chosen is None:
        print("no document is above the corpus mean", file=sys.stderr)

    _print_json(
        {
            "schema": SCHEMA_VERSION,
            "corpus_mean": report.corpus_mean,
            "documents": [
                {"doc": doc_id, "mean": mean, "delta": delta}
                for doc_id, mean, delta in report.entries
            ],
            "chosen": report.chosen,
        }
    )
    return EX_OK


def cmd_summarize(args) -> int:
    config = _resolve_config(args)
    tagger = _tagger(config)
    index = load_index(args.index)
    doc = _load_document(args.doc, config)
    tagged = tag_document(doc, tagger)
    score = score_tagged(doc.id, tagged, index, doc.sentence_paragraphs())
    summary = select_summary(
        score,
        args.quota,
        ratio=config.ratio,
        connectives=config.connectives,
        backref_factor=config.backref_factor,
    )
    render_doc = doc if config.tagger == "builtin" else _detokenized(doc, tagged)
    print(render_summary(summary, render_doc, format=args.format or "text"))
    if args.scores_out:
        payload = _scores_payload(score, tagged, render_doc.sentences())
        with open(args.scores_out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EX_OK


def cmd_evaluate(args) -> int:
    summary_data = _load_json(args.summary)
    scores_data = _load_json(args.scores)
    if summary_data.get("doc") != scores_data.get("doc"):
        raise FormatError(
            f"summary is for {summary_data.get('doc')!r} but scores are for "
            f"{scores_data.get('doc')!r}"
        )
    try:
        summary = Summary(
            doc_id=summary_data["doc"],
            selected=tuple(summary_data["positions"]),
            threshold=summary_data["threshold"],
            quota=summary_data["quota"],
            backref_added=tuple(summary_data["backref_added"]),
            ranks=tuple(s["rank"] for s in summary_data["sentences"]),
        )
        score = DocumentScore(
            doc_id=scores_data["doc"],
            sentences=tuple(
                ScoredSentence(
                    position=r["position"],
                    sw=r["sw"],
                    suw=r["suw"],
                    s1=r["s1"],
                    s2=r["s2"],
                    t_n=r["t_n"],
                    w_n=r["w_n"],
                    paragraph=r["paragraph"],
                    first_word=r.get("first_word", ""),
                )
                for r in scores_data["sentences"]
            ),
            mean=scores_data["mean"],
            max_s1=scores_data["max_s1"],
            max_s2=scores_data["max_s2"],
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"summary or scores JSON is missing fields: {exc}")
    extracts = [read_extract_file(path) for path in args.extracts]
    reference = build_reference(
        extracts, len(score.sentences), majority=args.majority_threshold
    )
    report = overlap_report(summary, reference, extracts, score)
    _print_json(
        {
            "schema": SCHEMA_VERSION,
            "doc": summary.doc_id,
            "overlap": report.overlap,
            "precision": report.precision,
            "recall": report.recall,
            "performance": report.performance,
            "system_size": len(summary.selected),
            "reference_size": len(reference),
            "system_positions": list(summary.selected),
            "reference_positions": sorted(reference),
            "per_reviewer_overlap": dict(sorted(report.per_reviewer_overlap.items())),
            "sys_mean": report.sys_mean,
            "ref_mean": report.ref_mean,
            "sys_ssd": report.sys_ssd,
            "ref_ssd": report.ref_ssd,
            "mean_diff": report.mean_diff,
            "ssd_diff": report.ssd_diff,
        }
    )
    if args.reviewer_tsv:
        rows = [
            f"{reviewer}\t{overlap}"
            for reviewer, overlap in sorted(report.per_reviewer_overlap.items())
        ]
        with open(args.reviewer_tsv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(rows) + "\n")
    return EX_OK


def cmd_extract(args) -> int:
    config = _resolve_config(args)
    doc = extract_flat_text(
        _read_text(args.doc),
        doc_id=_doc_id(args.doc),
        p_only=config.p_only,
        strict_period=config.strict_period,
    )
    _print_json(
        {
            "schema": SCHEMA_VERSION,
            "doc": doc.id,
            "paragraphs": [list(para) for para in doc.paragraphs],
        }
    )
    return EX_OK


def cmd_score(args) -> int:
    config = _resolve_config(args)
    tagger = _tagger(config)
    index = load_index(args.index)
    doc = _load_document(args.doc, config)
    tagged = tag_document(doc, tagger)
    score = score_tagged(doc.id, tagged, index, doc.sentence_paragraphs())
    render_doc = doc if config.tagger == "builtin" else _detokenized(doc, tagged)
    _print_json(_scores_payload(score, tagged, render_doc.sentences()))
    return EX_OK


def _load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError(f"{path}: expected a JSON object")
    if data.get("schema") != SCHEMA_VERSION:
        raise FormatError(f"{path}: unsupported schema {data.get('schema')!r}")
    return data


def _add_tagging_options(sub) -> None:
    sub.add_argument(
        "--tagger",
        choices=("builtin", "pretagged"),
        help="tagging mode (default: builtin)",
    )
    sub.add_argument(
        "--lexicon",
        metavar="TSV",
        help="word<TAB>tag lexicon replacing the bundled one (default: bundled)",
    )


def _add_extraction_options(sub, *, with_p_only: bool = True) -> None:
    sub.add_argument(
        "--strict-period",
        action="store_true",
        default=None,
        dest="strict_period",
        help="split sentences at every period, no guards (default: off)",
    )
    if with_p_only:
        sub.add_argument(
            "--p-only",
            action="store_true",
            default=None,
            dest="p_only",
            help="only <p> tags separate paragraphs (default: all block tags)",
        )


def _add_config_option(sub) -> None:
    sub.add_argument(
        "--config",
        metavar="FILE",
        help="key=value settings file; flags take precedence (default: none)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corpsum", description=__doc__)
    parser.add_argument(
        "--version", action="version", version=f"corpsum {__version__}"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "build-corpus",
        help="count corpus nouns and write the term-frequency index",
    )
    sub.add_argument(
        "corpus",
        help="directory of .txt files, a single text file, or - for stdin",
    )
    sub.add_argument(
        "-o", "--output", required=True, metavar="TSV",
        help="index file to write",
    )
    sub.add_argument(
        "--per-line",
        action="store_true",
        default=None,
        dest="per_line",
        help="treat every non-blank line as one sentence (default: off)",
    )
    _add_tagging_options(sub)
    _add_extraction_options(sub, with_p_only=False)
    _add_config_option(sub)
    sub.set_defaults(func=cmd_build_corpus)

    sub = commands.add_parser(
        "rank-docs",
        help="rank candidate documents against the corpus mean",
    )
    sub.add_argument("docs", nargs="+", metavar="DOC", help="candidate documents")
    sub.add_argument("--index", required=True, metavar="TSV", help="index file")
    sub.add_argument(
        "--corpus", required=True,
        help="corpus directory or file (for the corpus mean)",
    )
    sub.add_argument(
        "--per-line",
        action="store_true",
        default=None,
        dest="per_line",
        help="corpus file has one sentence per line (default: off)",
    )
    _add_tagging_options(sub)
    _add_extraction_options(sub)
    _add_config_option(sub)
    sub.set_defaults(func=cmd_rank_docs)

    sub = commands.add_parser(
        "summarize", help="score a document and print its summary"
    )
    sub.add_argument("doc", help="document file (.html or .txt), or - for stdin")
    sub.add_argument("--index", required=True, metavar="TSV", help="index file")
    sub.add_argument(
        "--ratio", type=float, help="summary share of the document (default: 0.3)"
    )
    sub.add_argument(
        "--quota",
        type=int,
        help="exact sentence quota overriding --ratio (default: from --ratio)",
    )
    sub.add_argument(
        "--backref-factor",
        type=float,
        dest="backref_factor",
        help="connective back-reference rank factor (default: 0.7)",
    )
    sub.add_argument(
        "--connectives",
        metavar="FILE",
        help="file with one connective per line (default: built-in list)",
    )
    sub.add_argument(
        "--format",
        choices=("text", "json"),
        help="output format (default: text)",
    )
    sub.add_argument(
        "--scores-out",
        metavar="FILE",
        dest="scores_out",
        help="also write the full sentence scores JSON (default: none)",
    )
    _add_tagging_options(sub)
    _add_extraction_options(sub)
    _add_config_option(sub)
    sub.set_defaults(func=cmd_summarize)

    sub = commands.add_parser(
        "evaluate", help="compare a summary against human extracts"
    )
    sub.add_argument(
        "extracts", nargs="+", metavar="EXTRACT",
        help="extract files, one 0-based position per line",
    )
    sub.add_argument(
        "--summary", required=True, metavar="JSON",
        help="summary written by summarize --format json",
    )
    sub.add_argument(
        "--scores", required=True, metavar="JSON",
        help="scores written by score or summarize --scores-out",
    )
    sub.add_argument(
        "--majority-threshold",
        type=int,
        dest="majority_threshold",
        help="votes needed for the reference (default: strict majority)",
    )
    sub.add_argument(
        "--reviewer-tsv",
        metavar="FILE",
        dest="reviewer_tsv",
        help="also write per-reviewer overlaps as TSV (default: none)",
    )
    _add_config_option(sub)
    sub.set_defaults(func=cmd_evaluate)

    sub = commands.add_parser(
        "extract", help="debug: print extracted paragraphs as JSON"
    )
    sub.add_argument("doc", help="document file, or - for stdin")
    _add_extraction_options(sub)
    _add_config_option(sub)
    sub.set_defaults(func=cmd_extract)

    sub = commands.add_parser(
        "score", help="debug: print all sentence scores as JSON"
    )
    sub.add_argument("doc", help="document file, or - for stdin")
    sub.add_argument("--index", required=True, metavar="TSV", help="index file")
    _add_tagging_options(sub)
    _add_extraction_options(sub)
    _add_config_option(sub)
    sub.set_defaults(func=cmd_score)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return args.func(args)
    except EmptyCorpus as exc:
        print(f"corpsum: empty corpus: {exc}", file=sys.stderr)
        return EX_EMPTY_CORPUS
    except CorpsumError as exc:
        print(f"corpsum: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"corpsum: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main(sys.argv[1:]))
