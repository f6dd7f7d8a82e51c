"""Exception types shared across the package."""


class McdaSelectError(Exception):
    """Base class for all errors raised by this package."""


class KBParseError(McdaSelectError):
    """A knowledge-base data file row could not be parsed."""


class KBValidationError(McdaSelectError):
    """A knowledge-base record violates a structural constraint."""


class DuplicateEntryError(KBValidationError):
    """Two knowledge-base records share an id or an abbreviation."""


class MethodNotFoundError(McdaSelectError, KeyError):
    """No method exists for the requested id or abbreviation."""


class DescriptorParseError(McdaSelectError, ValueError):
    """A descriptor assignment names an unknown slot or an out-of-domain value."""


class InvalidDescriptorError(McdaSelectError, ValueError):
    """A descriptor vector fails one of the four validity steps.

    ``step`` identifies the first violated step: 1 covers the weight slots
    (c1, c1.1), 2 the comparison scale (c2), 3 the uncertainty slots
    (c3, c3.1, c3.1.1, c3.1.2) and 4 the problematic slots (c4, c4.1).
    """

    def __init__(self, step: int, message: str):
        super().__init__(message)
        self.step = step


class NoComparisonError(McdaSelectError, ValueError):
    """The described problem never compares decision variants, so no method applies."""


class CorpusError(McdaSelectError):
    """The reference-case corpus file is malformed or inconsistent."""
