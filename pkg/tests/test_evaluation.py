"""Reference construction by majority vote and overlap reporting."""

from __future__ import annotations

import statistics

import pytest

from corpsum import (
    DocumentScore,
    HumanExtract,
    ScoredSentence,
    Summary,
    build_reference,
    overlap_report,
    read_extract_file,
)
from corpsum.errors import (
    DegenerateInput,
    EmptyReference,
    FormatError,
    RangeError,
)


def extract(reviewer: str, *positions: int) -> HumanExtract:
    return HumanExtract(reviewer=reviewer, positions=frozenset(positions))


def scores(ranks) -> DocumentScore:
    sentences = tuple(
        ScoredSentence(position=i, sw=rank, suw=0.0)
        for i, rank in enumerate(ranks)
    )
    return DocumentScore(
        doc_id="d",
        sentences=sentences,
        mean=sum(ranks) / len(ranks),
        max_s1=max(ranks),
        max_s2=0.0,
    )


def summary(*positions: int) -> Summary:
    return Summary(
        doc_id="d",
        selected=tuple(positions),
        threshold=0.0,
        quota=len(positions),
        backref_added=(),
        ranks=tuple(0.0 for _ in positions),
    )


class TestReadExtractFile:
    def test_plain_positions(self, tmp_path):
        path = tmp_path / "alice.txt"
        path.write_text("0\n3\n7\n", encoding="utf-8")
        got = read_extract_file(path)
        assert got.positions == {0, 3, 7}
        assert got.reviewer == "alice"

    def test_duplicates_collapse(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("0\n0\n3\n", encoding="utf-8")
        assert read_extract_file(path).positions == {0, 3}

    def test_comments_and_blanks(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("# picks\n2  # second\n\n5\n", encoding="utf-8")
        assert read_extract_file(path).positions == {2, 5}

    def test_non_integer_rejected(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("0\nabc\n", encoding="utf-8")
        with pytest.raises(FormatError, match="line 2"):
            read_extract_file(path)

    def test_negative_rejected(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("-3\n", encoding="utf-8")
        with pytest.raises(FormatError, match="negative"):
            read_extract_file(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text("# nothing\n", encoding="utf-8")
        with pytest.raises(FormatError, match="no positions"):
            read_extract_file(path)


class TestHumanExtract:
    def test_empty_positions_rejected(self):
        with pytest.raises(ValueError):
            HumanExtract(reviewer="r", positions=frozenset())

    def test_negative_positions_rejected(self):
        with pytest.raises(ValueError):
            HumanExtract(reviewer="r", positions=frozenset({-1}))


class TestBuildReference:
    def test_two_of_three_is_majority(self):
        got = build_reference(
            [extract("a", 4), extract("b", 4), extract("c", 9)], 10
        )
        assert got == {4}

    def test_half_of_four_is_not(self):
        # Tally 0:3, 1:2, 2:2, 3:1 over four reviewers; only 0 passes.
        got = build_reference(
            [
                extract("a", 0, 1),
                extract("b", 0, 2),
                extract("c", 0, 3),
                extract("d", 1, 2),
            ],
            8,
        )
        assert got == {0}

    def test_sixteen_reviewers_boundary(self):
        eight_yes = [extract(f"y{i}", 5) for i in range(8)]
        eight_no = [extract(f"n{i}", 6) for i in range(8)]
        with pytest.raises(EmptyReference):
            build_reference(eight_yes + eight_no, 10)

    def test_identical_extracts_reproduce_themselves(self):
        copies = [extract(f"r{i}", 1, 4, 6) for i in range(3)]
        assert build_reference(copies, 10) == {1, 4, 6}

    def test_majority_threshold_override(self):
        got = build_reference(
            [
                extract("a", 0, 1),
                extract("b", 0, 2),
                extract("c", 0, 3),
                extract("d", 1, 2),
            ],
            8,
            majority=2,
        )
        assert got == {0, 1, 2}

    def test_out_of_range_extract(self):
        with pytest.raises(RangeError, match="sentence 12"):
            build_reference([extract("a", 2, 12)], 10)

    def test_no_extracts(self):
        with pytest.raises(DegenerateInput):
            build_reference([], 10)

    def test_bad_majority(self):
        with pytest.raises(DegenerateInput):
            build_reference([extract("a", 1)], 10, majority=0)


class TestOverlapReport:
    RANKS = [90.0, 80.0, 70.0, 60.0, 50.0, 40.0, 30.0, 20.0]

    def test_five_of_six(self):
        extracts = [extract("a", 1, 2, 3, 4, 5, 6)]
        report = overlap_report(
            summary(0, 1, 2, 3, 4, 5),
            frozenset({1, 2, 3, 4, 5, 6}),
            extracts,
            scores(self.RANKS),
        )
        assert report.overlap == 5
        assert report.recall == pytest.approx(5 / 6)
        assert report.precision == pytest.approx(5 / 6)
        assert report.performance == report.recall
        assert report.per_reviewer_overlap == {"a": 5}

    def test_identity(self):
        report = overlap_report(
            summary(0, 3), frozenset({0, 3}), [], scores(self.RANKS)
        )
        assert report.precision == 1.0
        assert report.recall == 1.0
        assert report.mean_diff == 0.0
        assert report.ssd_diff == 0.0

    def test_disjoint(self):
        report = overlap_report(
            summary(0, 1), frozenset({6, 7}), [], scores(self.RANKS)
        )
        assert report.overlap == 0
        assert report.precision == 0.0
        assert report.recall == 0.0

    def test_means_and_ssds_over_rank_values(self):
        report = overlap_report(
            summary(0, 2, 4), frozenset({1, 3}), [], scores(self.RANKS)
        )
        assert report.sys_mean == pytest.approx(statistics.mean([90, 70, 50]))
        assert report.sys_ssd == pytest.approx(statistics.stdev([90, 70, 50]))
        assert report.ref_mean == pytest.approx(statistics.mean([80, 60]))
        assert report.ref_ssd == pytest.approx(statistics.stdev([80, 60]))
        assert report.mean_diff == pytest.approx(abs(70 - 70))
        assert report.ssd_diff == pytest.approx(
            abs(statistics.stdev([90, 70, 50]) - statistics.stdev([80, 60]))
        )

    def test_single_sentence_ssd_is_zero(self):
        report = overlap_report(
            summary(0), frozenset({1}), [], scores(self.RANKS)
        )
        assert report.sys_ssd == 0.0
        assert report.ref_ssd == 0.0

    def test_per_reviewer_overlaps(self):
        extracts = [extract("a", 0, 1, 5), extract("b", 7)]
        report = overlap_report(
            summary(0, 1, 2), frozenset({0}), extracts, scores(self.RANKS)
        )
        assert report.per_reviewer_overlap == {"a": 2, "b": 0}

    def test_out_of_range_system_position(self):
        with pytest.raises(RangeError, match="system"):
            overlap_report(
                summary(0, 99), frozenset({0}), [], scores(self.RANKS)
            )

    def test_out_of_range_reference_position(self):
        with pytest.raises(RangeError, match="reference"):
            overlap_report(
                summary(0), frozenset({99}), [], scores(self.RANKS)
            )
