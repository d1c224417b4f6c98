"""Working-precision context and deterministic decimal formatting.

Every numerical routine in the package takes a :class:`PrecisionContext`.
Computation happens at ``digits + guard`` decimal digits; values are reported
at ``digits``.  mpmath's global context is used as the big-real engine, so
:meth:`PrecisionContext.working` must be entered around any arithmetic.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, replace

import mpmath
from mpmath import mp, mpf


class PrecisionRefused(ValueError):
    """Raised when the requested working precision cannot support the result."""

    def __init__(self, message: str, required_digits: int):
        super().__init__(f"{message} (requires at least {required_digits} digits)")
        self.required_digits = required_digits


class NumericFailure(ArithmeticError):
    """Raised when a computation degenerates, e.g. a radicand loses its sign."""


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = 50
    guard: int = 10

    def __post_init__(self):
        if self.digits < 10:
            raise ValueError("digits must be at least 10")
        if self.guard < 0:
            raise ValueError("guard must be non-negative")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard

    @contextmanager
    def working(self, extra: int = 0):
        """Run the enclosed block at ``digits + guard + extra`` digits."""
        with mp.workdps(self.working_digits + extra):
            yield

    def widened(self, extra: int) -> "PrecisionContext":
        return replace(self, digits=self.digits + extra)

    def with_digits(self, digits: int) -> "PrecisionContext":
        return replace(self, digits=digits)


def fmt(x, digits: int) -> str:
    """Format a real to ``digits`` significant digits, identically on every run."""
    return mpmath.nstr(x, digits, strip_zeros=False, min_fixed=-math.inf, max_fixed=math.inf)


def truncate_decimals(x, places: int) -> str:
    """Fixed-point string with ``places`` decimals, truncated toward zero.

    Tables in the literature print truncated rather than rounded digits; this
    reproduces that convention.  ``x`` must carry more than ``places`` correct
    decimals for the result to be meaningful.
    """
    x = mpf(x)
    neg = x < 0
    scaled = int(mpmath.floor(abs(x) * mpf(10) ** places))
    whole, frac = divmod(scaled, 10**places)
    s = f"{whole}.{frac:0{places}d}" if places else str(whole)
    return "-" + s if neg else s


def matching_decimals(a: str, b: str) -> int:
    """Number of agreeing decimal places between two fixed-point strings.

    Returns ``-1`` if the integer parts differ.
    """
    ia, _, fa = a.strip().partition(".")
    ib, _, fb = b.strip().partition(".")
    if ia != ib:
        return -1
    n = 0
    for ca, cb in zip(fa, fb):
        if ca != cb:
            break
        n += 1
    return n


def correct_decimals(value, reference) -> int:
    """Decimal places to which ``value`` agrees with ``reference``.

    Measured as ``floor(-log10 |value - reference|)``, capped at the working
    precision when the two are equal.
    """
    diff = abs(mpf(value) - mpf(reference))
    if diff == 0:
        return mp.dps
    return int(mpmath.floor(-mpmath.log10(diff)))


def significant_digits(value, reference) -> int:
    """Significant digits of agreement: ``floor(-log10 |relative error|)``."""
    ref = mpf(reference)
    diff = abs(mpf(value) - ref)
    if diff == 0:
        return mp.dps
    return int(mpmath.floor(-mpmath.log10(diff / abs(ref))))
