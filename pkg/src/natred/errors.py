"""Exception types shared across the package."""


class NatredError(ValueError):
    """Base class for all domain errors raised by this package."""


class EmptyStructure(NatredError):
    """Structure has no blocks or a non-positive complement dimension."""


class KappaOutOfRange(NatredError):
    """Casimir constant outside [0, 1)."""


class CentralBlockNotOneDim(NatredError):
    """A block with kappa = 0 must be one-dimensional."""


class UnknownCatalogEntry(NatredError):
    """Requested catalog name is not a built-in structure."""


class ShapeMismatch(NatredError):
    """Coefficient vector length does not match the structure's block count."""


class NonPositiveCoefficient(NatredError):
    """A coefficient violates its positivity constraint."""


class InfeasiblePoint(NatredError):
    """Block coefficients violate the trace-slice feasibility inequality."""


class DegenerateTa(NatredError):
    """Operation requires a strictly positive tensor coefficient on the complement."""


class NoSimpleBlocks(NatredError):
    """Condition needs at least one block with kappa > 0."""


class NotSimpleK(NatredError):
    """Operation is restricted to structures with exactly one block, kappa > 0."""


class NonPositiveT1(NatredError):
    """First tensor coefficient must be strictly positive."""


class CurveDomain(NatredError):
    """Curve parameter lies outside the curve's domain of definition."""


class NonConvergence(NatredError):
    """Iteration budget exhausted without reaching the requested tolerance."""


class ConsistencyError(NatredError):
    """Internal cross-check between independent results failed."""
