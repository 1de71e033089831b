"""Exception types shared across the library."""


class FpcombError(Exception):
    """Base class for all library errors."""


class FieldMismatch(FpcombError):
    """Operands live over different prime moduli."""


class ZeroInverse(FpcombError):
    """Attempted to invert 0 mod p."""


class ZeroDilation(FpcombError):
    """Attempted to dilate a set by 0."""


class InvalidOrder(FpcombError):
    """Requested subgroup order does not divide p - 1."""


class EmptyMass(FpcombError):
    """Restricted mass is zero, decomposition undefined."""


class AsymmetricP(FpcombError):
    """Level-set decomposition requires P = -P."""


class NotInSpectrum(FpcombError):
    """B is not a subset of the requested spectrum."""


class HypothesisViolated(FpcombError):
    """A theorem-level size hypothesis fails for the given input."""


class ZeroCoefficient(FpcombError):
    """Equation coefficient a, b or c is zero."""


class ProportionalEquations(FpcombError):
    """Two equations in a family have proportional coefficient triples."""


class BudgetExceeded(FpcombError):
    """Exact search requested beyond the supported instance size."""


class BadParameter(FpcombError):
    """Construction parameter out of range."""


class EmptyFamily(FpcombError):
    """Search over an empty equation family is undefined."""


class BadOrder(FpcombError):
    """Non-averaging order t violates 2t < p."""


class TooSmall(FpcombError):
    """Input set is too small for the requested statistic."""


class ZeroInX(FpcombError):
    """Dilation multiset X must not contain 0."""


class ConfigError(FpcombError):
    """Invalid experiment configuration."""
