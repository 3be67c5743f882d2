"""Exception types shared across the package."""


class Q4FError(Exception):
    """Base class for every error raised by this package."""


class InvalidDimension(Q4FError):
    """Sphere dimension is zero or otherwise unusable."""


class ShapeMismatch(Q4FError):
    """Vector lengths or dimensions do not line up."""


class InvalidArgument(Q4FError):
    """Argument outside the documented domain."""


class NegativeContribution(Q4FError):
    """Contributions must be non-negative."""


class InvalidIndex(Q4FError):
    """Index outside the valid range."""


class UnsupportedExponent(Q4FError):
    """Closed form only exists for the quartic lever."""


class UnsupportedMoment(Q4FError):
    """Radial moment order not covered (odd orders)."""


class DegenerateModel(Q4FError):
    """Radial model would have zero scale."""


class SingularMarginal(Q4FError):
    """Marginal valuation diverges at this funding level."""


class NoPositiveOptimum(Q4FError):
    """Aggregate marginal valuation at zero funding does not exceed one."""


class SolverFailure(Q4FError):
    """Root finder did not converge within its configured budget."""


class SingularFOC(Q4FError):
    """First-order condition is undefined at zero contribution."""


class ConfigError(Q4FError):
    """Experiment configuration is malformed or inconsistent."""
