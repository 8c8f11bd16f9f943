"""Exception types raised across the package."""


class MprojError(ValueError):
    """Base class for invalid inputs rejected by this package."""


class NonFiniteError(MprojError):
    """Input matrix contains NaN or Inf."""


class AsymmetryError(MprojError):
    """Matrix passed to a symmetric routine is not symmetric within tolerance."""


class RankDeficiencyError(MprojError):
    """Requested basis rank is numerically void."""


class SingularMaskError(MprojError):
    """P^T U1 is (numerically) singular, so the masked projection is undefined."""


class DimensionError(MprojError):
    """Shapes of the operands do not agree."""
