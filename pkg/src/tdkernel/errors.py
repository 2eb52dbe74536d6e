"""Exception and warning types raised across the package."""


class TdkError(Exception):
    """Base class for all errors raised by tdkernel."""


class NonzeroViolation(TdkError, ValueError):
    """Some a_n (or the tail ratio) is zero."""


class NotLeftInvertible(TdkError):
    """The shift is not left-invertible (|a_n / a_{n+1}| not bounded away from 0)."""


class NotHermitian(TdkError, ValueError):
    pass


class NotPositiveDefinite(TdkError, ValueError):
    pass


class DimensionMismatch(TdkError, ValueError):
    pass


class NotTruncated(TdkError, ValueError):
    """The b-sequence does not have the truncated pattern b_0 = b_1 = 0, b_n = 0 for n > r."""


class NormalityDetected(TdkError):
    """The self-commutator vanishes on the window; quasinormality tests assume non-normal."""


class IndeterminateBand(TdkError):
    """A decision magnitude fell inside the indeterminate band [tol, 10 tol]."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class UnstableTruncation(TdkError):
    """Recomputing at twice the window size changed an entry beyond tolerance."""


class DivergenceWarning(RuntimeWarning):
    """Requested evaluation point lies where the geometric tail bound does not decay."""
