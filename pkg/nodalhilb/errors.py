class NodalHilbError(Exception):
    """Base class of every error raised by nodalhilb."""


class ConfigLocked(NodalHilbError, RuntimeError):
    pass


class NonUnitConstantTerm(NodalHilbError, ValueError):
    pass


class OrderExceeded(NodalHilbError, ValueError):
    pass


class PowerExceedsDimension(NodalHilbError, ValueError):
    pass


class DeltaMismatch(NodalHilbError, ValueError):
    pass


class DegreeOutOfRange(NodalHilbError, ValueError):
    pass


class InhomogeneousInvariant(NodalHilbError, RuntimeError):
    pass


class BoundExceeded(NodalHilbError, ValueError):
    def __init__(self, message: str, matrix_dim_estimate: int):
        super().__init__(message)
        self.matrix_dim_estimate = matrix_dim_estimate
