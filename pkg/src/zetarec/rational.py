"""Exact rational constants: Bernoulli and Euler numbers, harmonic numbers.

Bernoulli numbers come from the integer tangent-number recurrence of
Brent and Harvey, Euler numbers from the Seidel boustrophedon; both use only
integer arithmetic, which keeps thousands of terms cheap.  Tables grow by
doubling and are shared between callers.
"""
from __future__ import annotations

import threading
from fractions import Fraction

_lock = threading.Lock()
_tangent: list[int] = [0, 1]  # _tangent[k] = T_k, tan x = sum T_k x^(2k-1)/(2k-1)!
_secant: list[int] = [1]  # _secant[k] = |E_2k|


def _tangent_numbers(n: int) -> list[int]:
    t = [0] * (n + 1)
    t[1] = 1
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


def _secant_numbers(n: int) -> list[int]:
    # Boustrophedon rows; every second row ends with a secant number.
    out = [1]
    row = [1]
    for i in range(1, 2 * n + 1):
        new = [0] * (i + 1)
        if i % 2:
            for j in range(1, i + 1):
                new[j] = new[j - 1] + row[i - j]
            row = new
        else:
            for j in range(1, i + 1):
                new[j] = new[j - 1] + row[i - j]
            row = new
            out.append(row[-1])
    return out


def _ensure_tangent(k: int) -> None:
    if k < len(_tangent):
        return
    with _lock:
        if k >= len(_tangent):
            size = max(k, 2 * (len(_tangent) - 1), 8)
            _tangent[:] = _tangent_numbers(size)


def _ensure_secant(k: int) -> None:
    if k < len(_secant):
        return
    with _lock:
        if k >= len(_secant):
            size = max(k, 2 * (len(_secant) - 1), 8)
            _secant[:] = _secant_numbers(size)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n, with B_1 = -1/2 and B_(2k+1) = 0 for k >= 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    k = n // 2
    _ensure_tangent(k)
    four_k = 4**k
    b = Fraction(n * _tangent[k], four_k * (four_k - 1))
    return b if k % 2 else -b


def euler_number(n: int) -> Fraction:
    """Exact Euler number E_n for even n (E_0 = 1, E_2 = -1, E_4 = 5, ...)."""
    if n < 0 or n % 2:
        raise ValueError("Euler numbers are defined here for even n >= 0 only")
    k = n // 2
    _ensure_secant(k)
    e = _secant[k]
    return Fraction(-e if k % 2 else e)


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k as an exact fraction."""
    h = Fraction(0)
    for j in range(1, k + 1):
        h += Fraction(1, j)
    return h


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result
