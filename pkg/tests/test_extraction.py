"""HTML stripping, paragraph preservation, and sentence splitting."""

from __future__ import annotations

import pytest

from corpsum import FlatDocument, extract_flat_text, lines_document, split_sentences
from corpsum.errors import EmptyDocument


class TestSplitSentences:
    def test_plain_period_rule(self):
        got = split_sentences("All voltages are constant. Current flows.")
        assert got == ["All voltages are constant.", "Current flows."]

    def test_decimal_is_not_a_boundary(self):
        assert split_sentences("It is 3.5 ohms.") == ["It is 3.5 ohms."]

    def test_empty_input(self):
        assert split_sentences("") == []
        assert split_sentences("   \t ") == []

    def test_question_and_exclamation(self):
        got = split_sentences("Is it on? It is! Good.")
        assert got == ["Is it on?", "It is!", "Good."]

    def test_terminator_runs_stay_together(self):
        assert split_sentences("Really?! Yes.") == ["Really?!", "Yes."]

    def test_single_initial_does_not_split(self):
        got = split_sentences("G. Ohm stated the law. It held.")
        assert got == ["G. Ohm stated the law.", "It held."]

    def test_lowercase_single_letter_still_splits(self):
        assert split_sentences("Call it x. Then stop.") == [
            "Call it x.",
            "Then stop.",
        ]

    def test_period_without_following_space_is_kept(self):
        # Mid-token periods (versions, hostnames) never end a sentence.
        assert split_sentences("See node.example for details.") == [
            "See node.example for details."
        ]

    def test_trailing_text_without_terminator(self):
        assert split_sentences("First. and then some") == [
            "First.",
            "and then some",
        ]

    def test_strict_period_splits_everywhere(self):
        got = split_sentences("It is 3.5 ohms. Done.", strict_period=True)
        assert got == ["It is 3.", "5 ohms.", "Done."]

    def test_strict_period_ignores_question_marks(self):
        assert split_sentences("Is it on? Yes.", strict_period=True) == [
            "Is it on? Yes."
        ]


class TestExtractFlatText:
    def test_two_p_tags_form_two_paragraphs(self):
        doc = extract_flat_text("<p>A circuit.</p><p>A wire.</p>")
        assert doc.paragraphs == (("A circuit.",), ("A wire.",))

    def test_inline_tags_are_stripped_text_kept(self):
        doc = extract_flat_text("<div>Ohm's <b>law</b>.</div>")
        assert doc.paragraphs == (("Ohm's law.",),)

    def test_multiple_sentences_in_one_paragraph(self):
        doc = extract_flat_text("<p>V = IR. Power follows.</p>")
        assert doc.paragraphs == (("V = IR.", "Power follows."),)

    def test_comments_and_script_and_style_are_dropped(self):
        html = (
            "<!-- hidden. -->"
            "<style>p { color: red; }</style>"
            "<script>var x = 'Sentences. Here.';</script>"
            "<p>Visible text.</p>"
        )
        doc = extract_flat_text(html)
        assert doc.sentences() == ["Visible text."]

    def test_br_becomes_a_space(self):
        doc = extract_flat_text("<p>one half<br>other half.</p>")
        assert doc.sentences() == ["one half other half."]

    def test_entities_are_decoded_after_tag_stripping(self):
        doc = extract_flat_text("<p>a &lt;b&gt; c &amp; d.</p>")
        assert doc.sentences() == ["a <b> c & d."]

    def test_amp_decoded_last_keeps_escaped_entities_literal(self):
        # "&amp;lt;" means the four characters "&lt;", not "<".
        doc = extract_flat_text("<p>write &amp;lt; for less-than.</p>")
        assert doc.sentences() == ["write &lt; for less-than."]

    def test_block_tags_break_paragraphs(self):
        doc = extract_flat_text("<h1>Title.</h1><ul><li>One.</li><li>Two.</li></ul>")
        assert doc.paragraphs == (("Title.",), ("One.",), ("Two.",))

    def test_p_only_keeps_other_blocks_inline(self):
        html = "<p>First. <div>Second.</div> Third.</p>"
        full = extract_flat_text(html)
        p_only = extract_flat_text(html, p_only=True)
        assert full.paragraphs == (("First.",), ("Second.",), ("Third.",))
        assert p_only.paragraphs == (("First.", "Second.", "Third."),)

    def test_blank_lines_split_plain_text(self):
        doc = extract_flat_text("First block.\n\nSecond block.")
        assert doc.paragraphs == (("First block.",), ("Second block.",))

    def test_unclosed_tag_at_end_is_dropped(self):
        doc = extract_flat_text("<p>Kept text.</p><a href='x")
        assert doc.sentences() == ["Kept text."]

    def test_unclosed_script_drops_the_rest(self):
        doc = extract_flat_text("<p>Kept.</p><script>var x = 1;")
        assert doc.sentences() == ["Kept."]

    def test_whitespace_is_collapsed(self):
        doc = extract_flat_text("<p>spaced   out\n\ttext.</p>")
        assert doc.sentences() == ["spaced out text."]

    def test_empty_document_raises(self):
        with pytest.raises(EmptyDocument):
            extract_flat_text("<p>   </p><!-- only a comment. -->")

    def test_extraction_is_idempotent_on_its_own_output(self):
        html = "<p>One. Two.</p><p>Three.</p>"
        first = extract_flat_text(html)
        rendered = "\n\n".join(" ".join(para) for para in first.paragraphs)
        again = extract_flat_text(rendered)
        assert again.paragraphs == first.paragraphs

    def test_doc_id_is_carried(self):
        doc = extract_flat_text("<p>Text.</p>", doc_id="page7")
        assert doc.id == "page7"


class TestFlatDocument:
    def test_sentences_flatten_in_order(self):
        doc = FlatDocument(id="d", paragraphs=(("a.", "b."), ("c.",)))
        assert doc.sentences() == ["a.", "b.", "c."]
        assert doc.n_sentences == 3

    def test_sentence_paragraphs_align(self):
        doc = FlatDocument(id="d", paragraphs=(("a.", "b."), ("c.",)))
        assert doc.sentence_paragraphs() == [0, 0, 1]

    def test_blank_sentence_is_rejected(self):
        with pytest.raises(ValueError):
            FlatDocument(id="d", paragraphs=(("a.", "  "),))


class TestLinesDocument:
    def test_lines_are_sentences_blanks_are_paragraphs(self):
        doc = lines_document("a one\nb two\n\nc three\n")
        assert doc.paragraphs == (("a one", "b two"), ("c three",))

    def test_empty_raises(self):
        with pytest.raises(EmptyDocument):
            lines_document("\n  \n")
