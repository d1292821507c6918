"""Exception hierarchy."""


class GenBasisError(Exception):
    """Base class for all errors raised by the package."""


class DimensionError(GenBasisError, ValueError):
    """Operands have incompatible shapes."""


class ValidationError(GenBasisError, ValueError):
    """Input violates a structural requirement (Hermiticity, unitarity, independence...)."""


class ResidualError(GenBasisError, ArithmeticError):
    """A numerical identity that must hold failed beyond tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
