"""
Flattening HTML into paragraphs and sentences
=============================================

"""

# Web pages arrive as markup. extract_flat_text strips tags, decodes
# entities, and keeps paragraph boundaries, because summaries are built
# from sentences in their paragraph context.
from corpsum import extract_flat_text, split_sentences

PAGE = """
<html><head><style>p { color: red }</style></head>
<body>
<h1>Voltage dividers</h1>
<p>A divider splits a voltage across two resistors.
The output is taken at the midpoint &amp; follows the ratio.</p>
<p>Loading the output changes the ratio!
Pick resistors small enough that the load barely matters.
Values near 4.7 ohms are common in practice.</p>
<!-- navigation junk a reader never sees -->
<script>track();</script>
</body></html>
"""

# Tags are stripped but their text stays, so the heading becomes its own
# one-sentence paragraph; script, style, and comment content vanishes.
doc = extract_flat_text(PAGE, doc_id="divider")
print(f"document {doc.id!r}: {len(doc.paragraphs)} paragraphs\n")

for p, paragraph in enumerate(doc.paragraphs):
    for sentence in paragraph:
        print(f"  [{p}] {sentence}")

# Sentence boundaries respect abbreviations and decimal numbers: the
# period in 4.7 did not split the last sentence.
print()
print(split_sentences("It reads 4.7 ohms. G. Ohm would approve."))

# Strict mode splits only at periods, for text where ? and ! are data.
print(split_sentences("Why so hot? Check the resistor. It is tiny!",
                      strict_period=True))
