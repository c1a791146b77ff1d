"""Shared exception types."""

from __future__ import annotations


class ReduciblePolynomialError(ValueError):
    """Raised when an operation requires an irreducible polynomial.

    Carries the offending polynomial and, when one was computed, a proper
    factor witnessing reducibility.
    """

    def __init__(self, poly, factor=None):
        self.poly = poly
        self.factor = factor
        msg = f"polynomial {poly!r} is reducible over Q"
        if factor is not None:
            msg += f" (divisible by {factor!r})"
        super().__init__(msg)
