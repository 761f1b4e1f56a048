"""Exception hierarchy shared by every module of the package."""


class L1CohError(ValueError):
    """Base class for all errors raised by this package."""


class LengthMismatch(L1CohError):
    pass


class NotNormalized(L1CohError):
    pass


class NormalizationViolated(NotNormalized):
    """A parametrised family was given parameters off its normalisation constraint."""


class InvalidState(L1CohError):
    """Matrix failed Hermiticity, trace or positivity validation."""


class DimsMismatch(L1CohError):
    pass


class EmptyKeepSet(L1CohError):
    pass


class IndexOutOfRange(L1CohError):
    pass


class WeightSumInvalid(L1CohError):
    pass


class WeightOutOfRange(L1CohError):
    pass


class MixedCuts(L1CohError):
    """Single-cut check called on a decomposition whose components use several cuts."""


class FactorDimMismatch(L1CohError):
    pass


class DecompositionMismatch(L1CohError):
    """Assembled decomposition does not reproduce the state under test."""
