"""Next-prime recurrences and representations of the prime zeta function.

Each recurrence has the shape ``[small quantity]^(-1/s)`` where the small
quantity is ~ p_(n+1)^-s and is obtained by cancelling terms of size ~1 (or
~2^-s).  The working precision is therefore raised by ``s*log10(p)`` digits
before evaluating; without it the radicand is pure rounding noise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .precision import NumericFailure, PrecisionContext, PrecisionRefused
from .primes import first_primes, primes_up_to
from .rational import mobius
from .specfun import hurwitz_zeta, zeta

DEFAULT_PRIME_CAP = 5 * 10**6


def _cancellation_digits(n: int, s) -> int:
    # 1 - Q_n/zeta ~ p_(n+1)^-s and p_(n+1) < 2 p_n (Bertrand).
    p_bound = 2 * first_primes(n)[-1] if n > 0 else 2
    return int(math.ceil(float(s) * math.log10(p_bound))) + 5


def _root(x, s):
    if not x > 0:
        raise NumericFailure(f"radicand {mp.nstr(x, 5)} is not positive; precision exhausted")
    return mp.exp(-mp.log(x) / s)


def golomb_next_prime(n: int, s, ctx: PrecisionContext) -> mpf:
    """(1 - Q_n(s)/zeta(s))^(-1/s), which tends to p_(n+1) from below as s grows."""
    if n < 0:
        raise ValueError("n must be non-negative")
    wide = ctx.widened(_cancellation_digits(n, s))
    with wide.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("s must exceed 1")
        q = mpf(1)
        for p in first_primes(n):
            q *= 1 - mp.exp(-s * mp.log(p))
        # Q_n/zeta = 1/(zeta * prod(1 - p^-s))
        value = _root(1 - 1 / (zeta(s, wide) * q), s)
    with ctx.working():
        return +value


def golomb_variant_next_prime(n: int, s, ctx: PrecisionContext) -> mpf:
    """[zeta(s) - Q_n(s)]^(-1/s)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    wide = ctx.widened(_cancellation_digits(n, s))
    with wide.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("s must exceed 1")
        q = mpf(1)
        for p in first_primes(n):
            q *= 1 - mp.exp(-s * mp.log(p))
        value = _root(zeta(s, wide) - 1 / q, s)
    with ctx.working():
        return +value


# ---------------------------------------------------------------------------
# Prime zeta function


@dataclass(frozen=True)
class PrimeZetaValue:
    value: mpf
    mode: str
    depth: int
    error_bound: mpf


def _direct(s, abs_tol, depth, cap):
    # Tail after the last prime p: sum_{j>p} j^-s < p^-s + p^(1-s)/(s-1).
    if depth is None:
        x = 2.0
        while True:
            tail = mpf(x) ** (-s) * (1 + mpf(x) / (s - 1))
            if tail < abs_tol or x >= cap:
                break
            x = min(cap, x * 2)
        primes = primes_up_to(int(x)).primes
    else:
        primes = first_primes(depth)
    acc = mpf(0)
    for p in primes:
        acc += mp.exp(-s * mp.log(p))
    q = mpf(primes[-1] + 1) if primes else mpf(2)
    bound = q ** (-s) * (1 + q / (s - 1))
    return acc, len(primes), bound


def _mobius_log(s, depth, printed_form):
    if depth is None:
        # log zeta(ks) ~ 2^-ks
        depth = max(1, int(math.ceil((mp.dps + 5) * math.log2(10) / float(s))) + 1)
    acc = mpf(0)
    for k in range(1, depth + 1):
        mu = mobius(k)
        if mu == 0:
            continue
        if printed_form:
            acc += mu * mp.log(k * s) / k
        else:
            # zeta(ks) - 1 = zeta(ks, 2), which keeps full relative precision.
            tail = hurwitz_zeta(k * s, 2, _ctx_here())
            acc += mu * mp.log1p(tail) / k
    bound = mpf(2) ** (-(depth + 1) * s) * 2
    return acc, depth, bound


def _ctx_here() -> PrecisionContext:
    return PrecisionContext(max(10, mp.dps), 0)


def _nested_radical(s, depth):
    if depth < 1:
        raise ValueError("nested radical depth must be positive")
    p_next = mpf(0)  # P(2^depth s) ~ 0
    for level in range(depth - 1, -1, -1):
        arg = s * 2**level
        rad = 2 / zeta(arg, _ctx_here()) - 1 + p_next
        if rad < 0:
            raise NumericFailure(f"negative radicand at nesting level {level}")
        p_next = 1 - mp.sqrt(rad)
    return p_next, depth, mpf("nan")


def prime_zeta_value(
    s,
    ctx: PrecisionContext,
    *,
    mode: str = "direct",
    depth: int | None = None,
    abs_tol=None,
    prime_cap: int = DEFAULT_PRIME_CAP,
    printed_form: bool = False,
) -> PrimeZetaValue:
    """P(s) with the truncation used and an error bound.

    Modes: ``"direct"`` sums p^-s over primes (``depth`` primes, or until the
    tail bound falls below ``abs_tol`` or the prime cap is reached);
    ``"mobius-log"`` sums mu(k)/k log zeta(ks); ``"nested-radical"`` iterates
    P(s) = 1 - sqrt(2/zeta(s) - 1 + P(2s)) from P(2^depth s) = 0.  The
    nested radical is a second-order truncation and carries no error bound.
    ``printed_form`` evaluates the Mobius sum with log(ks) in place of
    log zeta(ks), for comparison only.
    """
    with ctx.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("prime zeta needs s > 1")
        if mode == "direct":
            tol = mpf(abs_tol) if abs_tol is not None else mpf(10) ** (-mp.dps) * mpf(2) ** (-s)
            v, d, b = _direct(s, tol, depth, prime_cap)
        elif mode == "mobius-log":
            v, d, b = _mobius_log(s, depth, printed_form)
        elif mode == "nested-radical":
            v, d, b = _nested_radical(s, 6 if depth is None else depth)
        else:
            raise ValueError(f"unknown prime zeta mode {mode!r}")
        return PrimeZetaValue(+v, mode, d, b)


def prime_zeta(s, ctx: PrecisionContext, mode: str = "direct", depth: int | None = None, **kw) -> mpf:
    return prime_zeta_value(s, ctx, mode=mode, depth=depth, **kw).value


def pzeta_next_prime(n: int, s, ctx: PrecisionContext, *, mode: str = "mobius-log", prime_cap: int = DEFAULT_PRIME_CAP) -> mpf:
    """[P(s) - P_n(s)]^(-1/s).

    The default evaluates P(s) through the Mobius-log series, which is exact
    to working precision.  With ``mode="direct"`` the prime sum must bring its
    tail below ``10^-digits * p_(n+1)^-s`` within ``prime_cap``, otherwise
    :class:`PrecisionRefused` is raised.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    extra = _cancellation_digits(n, s) - int(float(s) * math.log10(2))
    wide = ctx.widened(max(extra, 5))
    with wide.working():
        s = mpf(s)
        p_bound = 2 * first_primes(n)[-1] if n > 0 else 2
        tol = mpf(10) ** (-ctx.digits) * mpf(p_bound) ** (-s)
        pz = prime_zeta_value(s, wide, mode=mode, abs_tol=tol, prime_cap=prime_cap)
        if mode == "direct" and pz.error_bound > tol:
            have = int(-mp.log10(pz.error_bound / mpf(p_bound) ** (-s)))
            raise PrecisionRefused(f"P({s}) by {mode} is too coarse for p_{n + 1} (about {have} digits)", ctx.digits)
        partial = mpf(0)
        for p in first_primes(n):
            partial += mp.exp(-s * mp.log(p))
        value = _root(pz.value - partial, s)
    with ctx.working():
        return +value
