"""
Tagging words and finding the grammatical subject
=================================================

"""

# The tagger assigns one part-of-speech tag per token: lexicon lookup
# first, then suffix and shape rules. The subject is the noun-phrase
# chain that runs up to the first verb; its nouns get extra weight later.
from corpsum import TaggerHandle, builtin_tagger, extract_subject

tagger = builtin_tagger()

SENTENCE = ("The DC solution of an electric circuit is the solution "
            "where all voltages and currents are constant.")

tagged = extract_subject(tagger.tag_sentence(SENTENCE))
print("token            tag")
for token in tagged.tokens:
    print(f"{token.text:<16} {token.tag}")

# The subject span covers every noun phrase chained by prepositions
# before the verb "is".
start, end = tagged.subject
print("\nsubject:", " ".join(t.text for t in tagged.tokens[start:end]))
print("subject nouns:", tagged.subject_term_words())

# When tags are already known, pretagged mode takes word_TAG pairs
# verbatim; nothing is guessed.
pretagged = TaggerHandle(mode="pretagged")
ready = extract_subject(pretagged.tag_sentence("Current_NN flows_VBZ ._other"))
print("\npretagged:", [(t.text, t.tag) for t in ready.tokens])
print("subject span:", ready.subject)
