class ZetaError(Exception):
    """Base exception for chamber zeta computations."""
    pass


class AlgebraError(ZetaError):
    """Raised when an exact algebra operation cannot be carried out."""
    pass


class DivisionByZeroError(AlgebraError, ZeroDivisionError):
    """Raised on a zero divisor or a zero denominator."""
    pass


class InexactDivisionError(AlgebraError):
    """Raised when a quotient leaves the integer polynomial ring."""
    pass


class GcdError(AlgebraError):
    """Raised when asked for the gcd of two zero polynomials."""
    pass


class SeriesError(AlgebraError):
    """Raised for power series operations outside their domain."""
    pass


class ChamberError(ZetaError, ValueError):
    """Raised for vertices or chambers outside the sector, or bad chamber text."""
    pass


class InvalidGalleryError(ZetaError):
    """Raised when a gallery contains a zero-weight step."""
    pass


class MismatchError(ZetaError):
    """Raised when two routes to the same quantity disagree."""
    pass
