"""Exception types shared across the package."""


class GrassmannianError(Exception):
    pass


class InvalidArgs(GrassmannianError, ValueError):
    pass


class NonExactDivision(GrassmannianError, ArithmeticError):
    """Polynomial long division left a nonzero remainder."""


class DivisionByZero(GrassmannianError, ZeroDivisionError):
    pass


class InternalInconsistency(GrassmannianError, RuntimeError):
    """Two computations that must agree did not. Always a bug."""


class ComplexityLimit(GrassmannianError):
    def __init__(self, message, size=None, limit=None):
        super().__init__(message)
        self.size = size
        self.limit = limit
