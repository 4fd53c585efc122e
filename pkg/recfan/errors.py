class RecfanError(Exception):
    """Base class for every fault raised by recfan."""


class InputError(RecfanError, ValueError):
    """Malformed input: mismatched dimensions, empty cells, unparsable data."""


class PreconditionError(RecfanError):
    """An operation was called outside its domain."""


class NoFaceError(PreconditionError):
    """The functional is unbounded below, so the face it selects is empty."""


class ToricDatumRefused(PreconditionError):

    def __init__(self, predicate: str, message: str = ""):
        self.predicate = predicate
        super().__init__(message or "toric datum refused: complex is not {}".format(predicate))
