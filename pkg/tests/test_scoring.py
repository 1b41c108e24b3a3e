"""Sentence weights, subject weights, normalization, and document means."""

from __future__ import annotations

import pathlib

import pytest

from corpsum import (
    CorpusSource,
    DocumentScore,
    ScoredSentence,
    TaggerHandle,
    TermFrequencyIndex,
    document_mean,
    extract_flat_text,
    extract_subject,
    score_corpus,
    score_document,
    score_tagged,
    sentence_term_sum,
    sentence_weight,
    subject_weight,
    tag_document,
)
from corpsum.corpus import iter_corpus_sentences
from corpsum.errors import DegenerateInput
from tests.conftest import FIXTURES

PRETAGGED = TaggerHandle(mode="pretagged")

INDEX = TermFrequencyIndex(
    entries={"circuit": 100.0, "voltage": 40.0, "wire": 20.0},
    raw_counts={"circuit": 5, "voltage": 2, "wire": 1},
)


def tagged(line: str):
    return extract_subject(PRETAGGED.tag_sentence(line))


class TestSentenceTermSum:
    def test_zero_nouns(self):
        assert sentence_term_sum(tagged("it_PRP is_VBZ fine_JJ"), INDEX) == 0.0

    def test_repeated_noun_counts_each_occurrence(self):
        line = "circuit_NN meets_VBZ circuit_NN"
        assert sentence_term_sum(tagged(line), INDEX) == 200.0

    def test_mixed_known_and_unknown(self):
        line = "the_DT voltage_NN of_IN the_DT zebra_NN"
        assert sentence_term_sum(tagged(line), INDEX) == 40.0


class TestSentenceWeight:
    def test_formula(self):
        assert sentence_weight(6, 17, 218.14159) == pytest.approx(
            76.9911, abs=1e-3
        )

    def test_no_terms(self):
        assert sentence_weight(0, 10, 0.0) == 0.0

    def test_single_word_term_sentence(self):
        assert sentence_weight(1, 1, 100.0) == 100.0

    def test_guards(self):
        with pytest.raises(DegenerateInput):
            sentence_weight(1, 0, 10.0)
        with pytest.raises(DegenerateInput):
            sentence_weight(5, 4, 10.0)
        with pytest.raises(DegenerateInput):
            sentence_weight(-1, 4, 10.0)


class TestSubjectWeight:
    def test_subject_nouns_sum(self):
        line = "the_DT circuit_NN of_IN the_DT wire_NN is_VBZ live_JJ"
        assert subject_weight(tagged(line), INDEX) == 120.0

    def test_absent_subject_is_zero(self):
        assert subject_weight(tagged("is_VBZ fine_JJ"), INDEX) == 0.0

    def test_single_term_subject(self):
        assert subject_weight(tagged("circuit_NN hums_VBZ"), INDEX) == 100.0


class TestScoreTagged:
    LINES = [
        "the_DT circuit_NN is_VBZ closed_JJ",
        "a_DT wire_NN glows_VBZ",
        "it_PRP rests_VBZ",
    ]

    def score(self) -> DocumentScore:
        return score_tagged("d", [tagged(s) for s in self.LINES], INDEX)

    def test_best_sentence_attains_sw_100(self):
        score = self.score()
        assert score.sentences[0].sw == 100.0
        assert max(s.suw for s in score.sentences) == 100.0

    def test_hand_computed_s1(self):
        score = self.score()
        # One noun among four tokens at tf 100: s1 = (1/4) * 100.
        assert score.sentences[0].s1 == pytest.approx(100.0 / 4, rel=1e-12)
        assert score.sentences[1].s1 == pytest.approx(20.0 / 3, rel=1e-12)
        assert score.sentences[2].s1 == 0.0

    def test_rank_is_sw_plus_suw(self):
        for s in self.score().sentences:
            assert s.rank == s.sw + s.suw

    def test_mean_is_arithmetic_over_s1(self):
        score = self.score()
        s1s = [s.s1 for s in score.sentences]
        assert score.mean == pytest.approx(sum(s1s) / len(s1s), rel=1e-12)

    def test_zero_maxima_yield_zero_scores(self):
        score = score_tagged("d", [tagged("it_PRP rests_VBZ")], INDEX)
        assert score.sentences[0].sw == 0.0
        assert score.sentences[0].suw == 0.0
        assert score.max_s1 == 0.0

    def test_first_word_is_case_folded(self):
        score = score_tagged("d", [tagged("However_RB no_DT")], INDEX)
        assert score.sentences[0].first_word == "however"

    def test_paragraphs_default_to_zero(self):
        assert all(s.paragraph == 0 for s in self.score().sentences)

    def test_empty_document_rejected(self):
        with pytest.raises(DegenerateInput):
            score_tagged("d", [], INDEX)
        with pytest.raises(DegenerateInput):
            DocumentScore(doc_id="d", sentences=(), mean=0.0, max_s1=0.0, max_s2=0.0)


class TestScoredSentence:
    def test_rank_property(self):
        s = ScoredSentence(position=0, sw=41.76, suw=63.7296)
        assert s.rank == pytest.approx(105.4896, abs=1e-4)

    def test_synthetic_defaults(self):
        s = ScoredSentence(position=3, sw=50.0, suw=0.0)
        assert s.first_word == ""
        assert s.w_n == 1


class TestAgainstDocuments:
    def test_score_document_carries_paragraphs(self, tagger, fixture_index):
        doc = extract_flat_text("<p>The circuit. A wire.</p><p>More.</p>")
        score = score_document(doc, fixture_index, tagger)
        assert [s.paragraph for s in score.sentences] == [0, 0, 1]

    def test_single_sentence_document(self, tagger, fixture_index):
        doc = extract_flat_text("<p>The circuit hums.</p>")
        score = score_document(doc, fixture_index, tagger)
        assert score.sentences[0].sw == 100.0
        assert score.sentences[0].rank in (100.0, 200.0)

    def test_document_mean_accessor(self, tagger, fixture_index):
        doc = extract_flat_text("<p>The circuit hums. A wire.</p>")
        score = score_document(doc, fixture_index, tagger)
        assert document_mean(score) == score.mean

    def test_fixture_document_means(self, tagger, fixture_index):
        # Golden values pinned from the shipped fixtures.
        expected = {
            "doc2": 18.478765352294765,
            "doc3": 78.95054945054946,
            "doc4": 0.625,
            "doc5": 16.69047619047619,
        }
        for name, mean in expected.items():
            text = (FIXTURES / "docs" / f"{name}.txt").read_text(encoding="utf-8")
            score = score_document(
                extract_flat_text(text, doc_id=name), fixture_index, tagger
            )
            assert score.mean == pytest.approx(mean, rel=1e-12), name


class TestScoreCorpus:
    def source(self) -> CorpusSource:
        files = sorted((FIXTURES / "corpus").glob("*.txt"))
        return CorpusSource(
            documents=tuple((f.stem, f.read_text(encoding="utf-8")) for f in files)
        )

    def test_corpus_mean_matches_brute_force(self, tagger, fixture_index):
        source = self.source()
        score = score_corpus(source, fixture_index, tagger)
        total = 0.0
        count = 0
        for sentence in iter_corpus_sentences(source, tagger):
            ts = extract_subject(tagger.tag_sentence(sentence))
            t_n = len(ts.terms)
            w_n = len(ts.tokens)
            total += t_n / w_n * sentence_term_sum(ts, fixture_index)
            count += 1
        assert count == len(score.sentences)
        assert score.mean == pytest.approx(total / count, rel=1e-12)

    def test_fixture_corpus_mean_golden(self, tagger, fixture_index):
        score = score_corpus(self.source(), fixture_index, tagger)
        assert score.mean == pytest.approx(52.26019799746822, rel=1e-12)
        assert score.doc_id == "corpus"
