"""Exception hierarchy shared by all weighthom modules."""


class WeightHomError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(WeightHomError):
    """Operands live over different coefficient fields."""


class NotAUnitError(WeightHomError, ArithmeticError):
    """Inversion of a non-unit of R (positive valuation)."""


class ZeroInverseError(WeightHomError, ZeroDivisionError):
    """Inversion of (or division by) zero."""


class NotInRingError(WeightHomError, ArithmeticError):
    """A quotient would have negative valuation and so leave R."""


class ParseError(WeightHomError, ValueError):
    """Malformed textual input (ring elements, documents, dot-brackets)."""


class ValidationError(WeightHomError, ValueError):
    """A weighted complex violates face closure or weight monotonicity."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class ThetaUndefinedError(WeightHomError, ValueError):
    """theta^{v',v} needs omega(s) >= omega'(s) for every simplex."""


class DimensionError(WeightHomError, ValueError):
    """Requested degree is outside the range supported by the complex."""


class PairingError(WeightHomError, RuntimeError):
    """No kappa/mu pairing reproduces the invariant factors (a bug)."""


class OracleLimitError(WeightHomError, ValueError):
    """Matrix too large for brute-force minor enumeration."""
