"""Truncated Taylor series ("jets") over mpmath reals.

A :class:`Jet` stores scaled derivatives ``coeffs[k] = f^(k)(center) / k!``.
Raw derivatives are rebuilt only on request by :meth:`Jet.derivative`, which
keeps magnitudes bounded at orders in the hundreds.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from mpmath import mp, mpf


@dataclass(frozen=True)
class Jet:
    center: mpf
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a jet needs at least the constant coefficient")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, center=0) -> "Jet":
        return cls(mpf(center), tuple(mpf(c) for c in coeffs))

    @classmethod
    def constant(cls, value, order: int, center=0) -> "Jet":
        return cls(mpf(center), (mpf(value),) + (mpf(0),) * order)

    @classmethod
    def variable(cls, order: int, center=0) -> "Jet":
        """Jet of the identity map ``s -> s`` at ``center``."""
        c = [mpf(center), mpf(1)] + [mpf(0)] * (order - 1)
        return cls(mpf(center), tuple(c[: order + 1]))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self, k: int) -> mpf:
        return self.coeffs[k] * mp.factorial(k)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def _check(self, other: "Jet") -> None:
        if self.order != other.order or self.center != other.center:
            raise ValueError(
                f"jet shapes differ: order {self.order} vs {other.order}, "
                f"center {self.center} vs {other.center}"
            )

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet(self.center, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return Jet(self.center, (self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.center, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, other)
        return Jet(self.center, tuple(a * other for a in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate the truncated series at offset ``x`` from the center (Horner)."""
        acc = mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def jet_mul(a: Jet, b: Jet) -> Jet:
    """Cauchy product truncated at the common order."""
    a._check(b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        acc = mpf(0)
        for j in range(k + 1):
            acc += ac[j] * bc[k - j]
        out.append(acc)
    return Jet(a.center, tuple(out))


def mul_linear(a: Jet, c0, c1=1) -> Jet:
    """Multiply by the linear jet ``c0 + c1*x`` in O(order)."""
    ac = a.coeffs
    out = [ac[0] * c0]
    for k in range(1, len(ac)):
        out.append(ac[k] * c0 + ac[k - 1] * c1)
    return Jet(a.center, tuple(out))


def jet_log(a: Jet) -> Jet:
    """Jet of ``log(a)`` from ``a * (log a)' = a'``.

    The constant term must be positive; callers holding a negative-valued
    function negate it first.
    """
    ac = a.coeffs
    if not ac[0] > 0:
        raise ValueError("jet_log needs a positive constant term")
    n = a.order
    g = [mp.log(ac[0])] + [mpf(0)] * n
    # k g_k a_0 = k a_k - sum_{j=1}^{k-1} j g_j a_{k-j}
    inv0 = 1 / ac[0]
    for k in range(1, n + 1):
        acc = k * ac[k]
        for j in range(1, k):
            acc -= j * g[j] * ac[k - j]
        g[k] = acc * inv0 / k
    return Jet(a.center, tuple(g))


def jet_exp(a: Jet) -> Jet:
    """Jet of ``exp(a)`` from ``h' = a' h``."""
    ac = a.coeffs
    n = a.order
    h = [mp.exp(ac[0])] + [mpf(0)] * n
    for k in range(1, n + 1):
        acc = mpf(0)
        for j in range(1, k + 1):
            acc += j * ac[j] * h[k - j]
        h[k] = acc / k
    return Jet(a.center, tuple(h))


def jet_reciprocal(a: Jet) -> Jet:
    ac = a.coeffs
    if ac[0] == 0:
        raise ZeroDivisionError("jet_reciprocal needs a non-zero constant term")
    n = a.order
    inv0 = 1 / ac[0]
    r = [inv0] + [mpf(0)] * n
    for k in range(1, n + 1):
        acc = mpf(0)
        for j in range(1, k + 1):
            acc += ac[j] * r[k - j]
        r[k] = -acc * inv0
    return Jet(a.center, tuple(r))


def power_jet(base, exponent_center, order: int, center=0) -> Jet:
    """Jet in ``x`` of ``base ** -(exponent_center + x)``.

    Coefficients are ``base^(-c) (-log base)^k / k!``, which is how every
    ``n^(-s)`` term of a Dirichlet series enters the Taylor expansion.
    """
    lb = -mp.log(base)
    c = mp.power(base, -mpf(exponent_center))
    out = [c]
    for k in range(1, order + 1):
        c = c * lb / k
        out.append(c)
    return Jet(mpf(center), tuple(out))
