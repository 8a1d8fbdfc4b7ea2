"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: InputError -> 2, BoundError -> 3,
TheoremViolation -> 4.
"""


class NonfratError(Exception):
    pass


class InputError(NonfratError):
    """Malformed or inconsistent input (bad permutation, non-normal subgroup, ...)."""


class ParseError(InputError):
    """Problem in a group/representation/config file; carries a line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BoundError(NonfratError):
    """A configured resource bound was exceeded."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class EnumerationLimitError(BoundError):
    pass


class LatticeLimitError(BoundError):
    pass


class SearchLimitError(BoundError):
    """Minimal-generating-set / omissibility search refused (group too large)."""


class SpinLimitError(BoundError):
    """Module too large for exhaustive spinning."""


class TheoremViolation(NonfratError):
    """A proved statement failed on concrete data.

    This is never a mathematical discovery: it signals a bug in this package
    (or deliberately corrupted input in the self-test hook) and is kept
    distinct from ordinary errors so callers can escalate it loudly.
    """
