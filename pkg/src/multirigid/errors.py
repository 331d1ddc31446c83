"""Error types shared across the package.

Every error carries a ``kind`` string that the CLI reports verbatim.
"""


class SchubertError(ValueError):
    kind = "Error"

    def __init__(self, message="", kind=None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind

    def as_record(self):
        return {"error": self.kind, "message": str(self)}


class IndexSyntaxError(SchubertError):
    kind = "SyntaxError"


class InvariantError(SchubertError):
    """Well-formed text or data that violates an index invariant.

    ``kind`` is one of AdjacencyAB, ParityD, UpperCount, Range, NotIncreasing.
    """

    KINDS = ("AdjacencyAB", "ParityD", "UpperCount", "Range", "NotIncreasing")

    def __init__(self, kind, message=""):
        if kind not in self.KINDS:
            raise AssertionError(f"unknown invariant kind {kind}")
        super().__init__(message or kind, kind=kind)


def _simple(name):
    return type(name, (SchubertError,), {"kind": name})


WrongFamily = _simple("WrongFamily")
NotApplicable = _simple("NotApplicable")
BudgetExceeded = _simple("BudgetExceeded")
NotMinimal = _simple("NotMinimal")
IncompatibleRank = _simple("IncompatibleRank")
IncompatibleParabolics = _simple("IncompatibleParabolics")
TooManyFactors = _simple("TooManyFactors")
BadStep = _simple("BadStep")
NotEssential = _simple("NotEssential")
NoBEntries = _simple("NoBEntries")
EmptyInput = _simple("EmptyInput")
OutOfRectangle = _simple("OutOfRectangle")
