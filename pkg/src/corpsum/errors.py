"""Exception types shared across the package."""


class CorpsumError(Exception):
    """Base class for every error raised by this package."""


class EmptyCorpus(CorpsumError):
    """No usable sentences were found while building the term index."""


class TaggerFailure(CorpsumError):
    """The tagger could not process a sentence."""


class FormatError(CorpsumError):
    """A data file does not match its expected format."""


class PretaggedFormatError(FormatError):
    """A token in pretagged input lacks the word_TAG form."""


class EmptyDocument(CorpsumError):
    """No visible text remained after extraction."""


class DegenerateInput(CorpsumError):
    """An operation received input outside its stated domain."""


class PositionOutOfRange(CorpsumError):
    """A sentence position does not exist in the document."""


class EmptyReference(CorpsumError):
    """Majority vote produced an empty reference summary."""


class RangeError(CorpsumError):
    """A position set references a sentence beyond the document length."""
