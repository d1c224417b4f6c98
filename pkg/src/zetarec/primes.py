"""Prime tables and prime-indexed partial objects.

Partial Euler products Q_n(s), partial prime zeta sums P_n(s), and the
modulus/argument form of the Euler product.  Prime powers are always taken
as ``exp(-s log p)`` so that large ``s`` never builds huge integers.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpc, mpf

from .precision import PrecisionContext
from .rational import bernoulli

MAX_SIEVE_LIMIT = 2 * 10**9

_lock = threading.Lock()
_cache: "PrimeTable | None" = None


class SieveLimitExceeded(MemoryError):
    pass


@dataclass(frozen=True)
class PrimeTable:
    primes: tuple
    limit: int

    def __len__(self):
        return len(self.primes)

    def __getitem__(self, i):
        return self.primes[i]


def _sieve(limit: int) -> tuple:
    if limit > MAX_SIEVE_LIMIT:
        raise SieveLimitExceeded(f"sieve bound {limit} exceeds {MAX_SIEVE_LIMIT}")
    if limit < 2:
        return ()
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_p[p]:
            is_p[p * p :: 2 * p] = False
    return tuple(int(p) for p in np.flatnonzero(is_p))


def primes_up_to(x: int) -> PrimeTable:
    """All primes ``<= x`` (x >= 2)."""
    x = int(x)
    if x < 2:
        raise ValueError("x must be at least 2")
    global _cache
    table = _cache
    if table is not None and table.limit >= x:
        cut = int(np.searchsorted(np.asarray(table.primes), x, side="right"))
        return PrimeTable(table.primes[:cut], x)
    with _lock:
        if _cache is None or _cache.limit < x:
            _cache = PrimeTable(_sieve(x), x)
        table = _cache
    cut = int(np.searchsorted(np.asarray(table.primes), x, side="right"))
    return PrimeTable(table.primes[:cut], x)


def first_primes(n: int) -> tuple:
    """The first ``n`` primes; regenerates the sieve with a doubled bound as needed."""
    if n <= 0:
        return ()
    if n < 6:
        limit = 15
    else:
        ln = math.log(n)
        limit = int(n * (ln + math.log(ln))) + 10
    while True:
        table = primes_up_to(limit)
        if len(table) >= n:
            return table.primes[:n]
        limit *= 2


def nth_prime(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return first_primes(n)[-1]


def _neg_power(p, s):
    return mp.exp(-s * mp.log(p))


def partial_euler_product(n: int, s, ctx: PrecisionContext) -> mpf:
    """Q_n(s) = prod_{k<=n} (1 - p_k^-s)^-1, with Q_0 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with ctx.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("partial_euler_product needs s > 1")
        acc = mpf(1)
        for p in first_primes(n):
            acc *= 1 - _neg_power(p, s)
        return 1 / acc


def partial_prime_zeta(n: int, s, ctx: PrecisionContext) -> mpf:
    """P_n(s) = sum_{k<=n} p_k^-s, with P_0 = 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    with ctx.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("partial_prime_zeta needs s > 1")
        acc = mpf(0)
        for p in first_primes(n):
            acc += _neg_power(p, s)
        return acc


def euler_product_modulus(sigma, t, n_terms: int, ctx: PrecisionContext, *, integer_form: bool | None = None) -> mpf:
    """|zeta(sigma + i t)| from the truncated cosine/cosh Euler product.

    For integer ``sigma`` the prefactor sqrt(zeta(4k)/zeta(2k)) is replaced
    by its closed form in Bernoulli numbers unless ``integer_form=False``.
    """
    from .specfun import zeta

    with ctx.working():
        sigma = mpf(sigma)
        t = mpf(t)
        if sigma <= 1:
            raise ValueError("euler_product_modulus needs sigma > 1")
        prod = mpf(1)
        for p in first_primes(n_terms):
            lp = mp.log(p)
            prod *= 1 - mp.cos(t * lp) / mp.cosh(sigma * lp)
        if integer_form is None:
            integer_form = sigma == int(sigma)
        if integer_form:
            k = int(sigma)
            b4, b2 = abs(bernoulli(4 * k)), abs(bernoulli(2 * k))
            ratio = (mpf(b4.numerator) / b4.denominator) * mp.factorial(2 * k)
            ratio /= (mpf(b2.numerator) / b2.denominator) * mp.factorial(4 * k)
            return (2 * mp.pi) ** k * mp.sqrt(ratio) / mp.sqrt(prod)
        return mp.sqrt(zeta(4 * sigma, ctx) / zeta(2 * sigma, ctx) / prod)


def euler_product_arg(sigma, t, n_terms: int, ctx: PrecisionContext) -> mpf:
    """arg zeta(sigma + i t) = -sum arctan(sin(t log p) / (p^sigma - cos(t log p)))."""
    with ctx.working():
        sigma = mpf(sigma)
        t = mpf(t)
        if sigma <= 1:
            raise ValueError("euler_product_arg needs sigma > 1")
        acc = mpf(0)
        for p in first_primes(n_terms):
            lp = mp.log(p)
            acc += mp.atan(mp.sin(t * lp) / (mp.exp(sigma * lp) - mp.cos(t * lp)))
        return -acc


def euler_product_polar(sigma, t, n_terms: int, ctx: PrecisionContext) -> mpc:
    """Recompose zeta(sigma + i t) as |zeta| e^(i arg zeta) from the two products."""
    r = euler_product_modulus(sigma, t, n_terms, ctx, integer_form=False)
    a = euler_product_arg(sigma, t, n_terms, ctx)
    with ctx.working():
        return r * mp.expj(a)
