class DomainException(ValueError):
    """Base domain exception."""

    pass


class SeriesSymbolMismatchError(DomainException):
    """Raised when two series are expanded in different symbols."""

    pass


class SeriesRingMismatchError(DomainException):
    """Raised when series coefficients live in incompatible rings."""

    pass


class TruncationError(DomainException):
    """Raised when an operation needs coefficients beyond the known order."""

    pass


class SeriesBranchError(DomainException):
    """Raised when a square root or inverse lacks a valid leading term."""

    pass


class RingMismatchError(DomainException):
    """Raised when elements of different function rings are combined."""

    pass


class UnsupportedRingOperationError(DomainException):
    """Raised when a ring cannot perform the requested operation exactly."""

    pass


class NonMonomialDivisionError(DomainException):
    """Raised when dividing by something that is not a monomial."""

    pass


class UnboundParameterError(DomainException):
    """Raised when a numeric evaluation misses a parameter value."""

    pass


class PoleEvaluationError(DomainException):
    """Raised when an element is evaluated at one of its poles."""

    pass


class InvalidEllipticParametersError(DomainException):
    """Raised when half-periods or moduli do not define a genuine lattice."""

    pass


class SecularResidueError(DomainException):
    """Raised when a re-expanded exponent keeps a secular term."""

    pass


class ResidualError(DomainException):
    """Raised when a recursion step leaves a non-canonical remainder."""

    pass


class IntegrationError(DomainException):
    """Raised when the monodromy integrator fails or loses unimodularity."""

    pass


class UnknownProblemError(DomainException):
    """Raised when a problem identifier is not in the catalog."""

    pass


class InvalidRunConfigError(DomainException):
    """Raised when a run configuration is incomplete or out of range."""

    pass
