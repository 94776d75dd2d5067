"""Exception types shared across the toolkit."""


class UeqcError(Exception):
    """Base class for all toolkit errors."""


class SpecError(UeqcError):
    """Malformed function spec string or out-of-range parameter."""


class SizeLimitExceeded(UeqcError):
    """Requested computation is beyond the supported instance size."""


class PromiseViolation(UeqcError):
    """Input lies outside the promise domain of a partial function/oracle."""


class Unsupported(UeqcError):
    """Operation not defined for this kind of function (e.g. partial input)."""


class NotASignRepresentation(UeqcError):
    """Polynomial does not have a strictly positive margin on the domain."""


class NormMismatch(UeqcError):
    """Sign representation does not carry the normalization an algorithm needs."""


class Infeasible(UeqcError):
    """LP has no feasible point; carries a Farkas certificate when available."""

    def __init__(self, message="infeasible", certificate=None):
        super().__init__(message)
        self.certificate = certificate


class Unbounded(UeqcError):
    """LP objective is unbounded; carries an improving ray when available."""

    def __init__(self, message="unbounded", ray=None):
        super().__init__(message)
        self.ray = ray


class CertificationError(UeqcError):
    """An internally computed optimality certificate failed to verify."""
