"""Typed errors raised by the toolkit."""


class NonPhysicalStateError(ValueError):
    """An operation required a physical state and got one that is not."""


class DegenerateStateError(ValueError):
    """A construction is singular for the given inputs (zero pivot, zero normalizer)."""


class NumericDomainError(ValueError):
    """A numeric expression left its valid domain (non-positive determinant, bad bracket)."""


class ModelValidityError(ValueError):
    """A physical model produced parameters outside the physical region.

    Carries the raw occupation ``n`` and anomalous moment ``m`` so the caller
    can inspect what the model actually returned.
    """

    def __init__(self, message: str, n: float, m: float):
        super().__init__(message)
        self.n = n
        self.m = m
