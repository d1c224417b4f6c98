"""Recurrences for primes and for ordinates of Riemann zeta zeros.

Arbitrary-precision evaluation (mpmath) of next-prime recurrences built on
the Euler product, Stieltjes constants from a determinant formula, closed
forms of the secondary zeta function Z(2m) and the recurrence that extracts
zeta zeros from them, plus supporting identities.
"""
from .precision import NumericFailure, PrecisionContext, PrecisionRefused

__version__ = "0.1.0"

__all__ = ["NumericFailure", "PrecisionContext", "PrecisionRefused", "__version__"]
