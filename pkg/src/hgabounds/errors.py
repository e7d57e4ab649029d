"""Exception hierarchy shared by every module."""


class HGAError(ValueError):
    """Base class for all errors raised by this package."""


class ValidationError(HGAError):
    """A sample, weight vector or matrix failed structural validation."""


class InfeasibleMeansError(HGAError):
    """The supplied means violate h <= g <= a (or are non-positive)."""


class DegenerateInputError(HGAError):
    """A strict inequality was requested at a point where it collapses."""


class DomainError(HGAError):
    """A scalar argument lies outside the domain of a kernel function."""


class DefinitenessError(HGAError):
    """A matrix is not symmetric positive definite."""


class OracleError(HGAError):
    """The brute-force oracle could not run (size cap or generation failure)."""


class FormatError(HGAError):
    """An input file or inline argument could not be parsed."""
