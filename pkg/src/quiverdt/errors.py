"""Exception hierarchy shared by all modules."""


class QuiverDTError(Exception):
    """Base class; ``kind`` is a short machine-readable tag used by the CLI."""

    kind = "error"


class DimensionError(QuiverDTError, ValueError):
    kind = "dimension"


class ZeroVectorError(QuiverDTError, ValueError):
    kind = "zero-vector"


class BoxMismatchError(QuiverDTError, ValueError):
    kind = "box-mismatch"


class OrderError(QuiverDTError, ValueError):
    kind = "order"


class GenericityError(QuiverDTError):
    kind = "genericity"


class ConsistencyError(QuiverDTError, ArithmeticError):
    """An exactness assertion failed: a bug, or a box too small."""

    kind = "consistency"


class BudgetError(QuiverDTError):
    kind = "budget"


class RangeError(QuiverDTError, ValueError):
    kind = "range"


class SymmetryError(QuiverDTError, ValueError):
    kind = "not-symmetric"
