"""Exception hierarchy shared by every cherfd module."""


class CherfdError(Exception):
    """Base class for all errors raised by cherfd."""


class DatasetError(CherfdError):
    """A dataset file could not be loaded or violates a type invariant."""


class ParseError(DatasetError):
    pass


class InvariantViolation(DatasetError):
    pass


class DuplicateLabel(DatasetError):
    pass


class BadDiagonal(DatasetError):
    pass


class UnknownLabel(CherfdError, LookupError):
    pass


class MissingTwist(CherfdError, LookupError):
    pass


class MissingWeightData(CherfdError):
    """The irrep is listed but carries neither character data nor an h value."""


class EmptyWindow(CherfdError, ValueError):
    pass


class OutsideWindow(CherfdError, ValueError):
    pass


class IncompleteInventory(CherfdError):
    pass


class NoWitness(CherfdError):
    pass


class UnsupportedExpansion(CherfdError):
    pass


class AmbiguousLevel(UnsupportedExpansion):
    """Two nonzero rows share the lowest level of a column."""


class CountMismatch(CherfdError):
    def __init__(self, remainder, expected):
        self.remainder = list(remainder)
        self.expected = expected
        super().__init__(
            f"{len(self.remainder)} candidates remain but {expected} expected: "
            + " ".join(self.remainder)
        )
