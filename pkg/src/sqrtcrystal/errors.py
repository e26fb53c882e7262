class SqrtCrystalError(Exception):
    """Base class for errors raised by this package."""


class InvalidShapeError(SqrtCrystalError, ValueError):
    pass


class IncompatibleSequenceError(SqrtCrystalError, ValueError):
    pass


class CrystalError(SqrtCrystalError):
    """A crystal failed an axiom or an operator left its universe."""


class ConsistencyError(SqrtCrystalError):
    """Two independent computations of the same quantity disagree."""


class SizeGuardError(SqrtCrystalError, ValueError):
    pass
