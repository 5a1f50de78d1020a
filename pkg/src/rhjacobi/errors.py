"""Exception types shared across the package."""


class RHJacobiError(Exception):
    """Base class for all package errors."""


class ParameterError(RHJacobiError, ValueError):
    """Invalid exponents, coefficients or other user parameters."""


class AnalyticityError(RHJacobiError, ValueError):
    """The perturbation h fails positivity or analyticity requirements."""


class DomainError(RHJacobiError, ValueError):
    """A point lies outside the domain of the requested function."""


class BranchError(DomainError):
    """A point lies on a branch cut where only boundary values exist."""


class ContourError(RHJacobiError, ValueError):
    """An integration contour is inadmissible or the integrand blew up."""


class OrderError(RHJacobiError, ValueError):
    """A requested expansion order or special-function order is unsupported."""


class NumericalError(RHJacobiError, ArithmeticError):
    """Loss of precision, overflow or non-convergence."""
