"""Identities tying single zeros or all zeros to classical constants.

* the s-ball radius R(s) = (zeta(s)/K(s))^(1/s) and its minimum;
* the Euler constant from one zero ordinate;
* |rho|^-2 from one ordinate, and the sum of |rho|^-2 over all zeros;
* Riemann's J(x) from the zeros and pi(x) by Mobius inversion.
"""
from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpc, mpf

from .precision import PrecisionContext
from .rational import mobius
from .specfun import ball_constant, zeta

# ---------------------------------------------------------------------------
# s-ball radius


def sball_radius(s, ctx: PrecisionContext) -> mpf:
    with ctx.working():
        s = mpf(s)
        if s <= 1:
            raise ValueError("the radius is defined here for s > 1")
        return (zeta(s, ctx) / ball_constant(s, ctx)) ** (1 / s)


def sball_minimum(ctx: PrecisionContext, lo=1.5, hi=5.0) -> tuple:
    """(s_min, R(s_min)) by golden-section search on [lo, hi]."""
    with ctx.working():
        a, b = mpf(lo), mpf(hi)
        invphi = (mp.sqrt(5) - 1) / 2
        tol = mpf(10) ** (-(ctx.digits // 2))
        c = b - invphi * (b - a)
        d = a + invphi * (b - a)
        fc, fd = sball_radius(c, ctx), sball_radius(d, ctx)
        while b - a > tol:
            if fc < fd:
                b, d, fd = d, c, fc
                c = b - invphi * (b - a)
                fc = sball_radius(c, ctx)
            else:
                a, c, fc = c, d, fd
                d = a + invphi * (b - a)
                fd = sball_radius(d, ctx)
        s = (a + b) / 2
        return s, sball_radius(s, ctx)


# ---------------------------------------------------------------------------
# Euler's constant and |rho|^2 from a single zero


def _dirichlet_partial(t, k: int, alternating: bool) -> mpc:
    """sum_{u<=k} (+-1)^(u+1) u^(-1/2 - i t)."""
    acc = mpc(0)
    for u in range(1, k + 1):
        lu = mp.log(u)
        term = mp.expj(-t * lu) / mp.sqrt(u)
        acc += term if (u % 2 or not alternating) else -term
    return acc


def _harmonic_mp(k: int) -> mpf:
    return mp.harmonic(k)


def gamma_from_zero(t, k: int, ctx: PrecisionContext, variant: str = "alternating", *, printed_form: bool = False) -> mpf:
    """Euler's constant from a single zero ordinate ``t`` and cutoff ``k``.

    ``alternating``: 2 sum_{v<u<=k} (-1)^(u+v+1) cos(t log(u/v))/sqrt(uv) - log k.
    ``direct``: (k - 1/2)/|rho|^2 - 2 sum_{v<u<k} cos(t log(u/v))/sqrt(uv) - log k.
    ``printed_form=True`` replaces the direct weight (k - 1/2) by 1 and flips
    the sign of the double sum; that expression grows like k/|rho|^2.

    Both double sums are evaluated in O(k) through
    |sum_u c_u u^(-1/2-it)|^2 = sum_u 1/u + 2 sum_{v<u} c_u c_v cos(t log(u/v))/sqrt(uv).
    """
    if k < 10:
        raise ValueError("k must be at least 10")
    if variant not in ("alternating", "direct"):
        raise ValueError(f"unknown variant {variant!r}")
    with ctx.working(5):
        t = mpf(t)
        if variant == "alternating":
            a = _dirichlet_partial(t, k, True)
            return _harmonic_mp(k) - abs(a) ** 2 - mp.log(k)
        s = _dirichlet_partial(t, k - 1, False)
        cross = abs(s) ** 2 - _harmonic_mp(k - 1)  # 2 sum_{v<u<k} cos(...)/sqrt(uv)
        inv_rho2 = 1 / (mpf(1) / 4 + t * t)
        if printed_form:
            return inv_rho2 + cross - mp.log(k)
        return (k - mpf(1) / 2) * inv_rho2 - cross - mp.log(k)


def gamma_double_sum(t, k: int, ctx: PrecisionContext, variant: str = "alternating") -> mpf:
    """The O(k^2) double sums written out term by term (reference implementation)."""
    with ctx.working(5):
        t = mpf(t)
        top = k if variant == "alternating" else k - 1
        logs = [mpf(0)] + [mp.log(u) for u in range(1, top + 1)]
        roots = [mpf(0)] + [mp.sqrt(u) for u in range(1, top + 1)]
        acc = mpf(0)
        for v in range(1, top + 1):
            for u in range(v + 1, top + 1):
                term = mp.cos(t * (logs[u] - logs[v])) / (roots[u] * roots[v])
                if variant == "alternating":
                    acc += term if (u + v) % 2 else -term
                else:
                    acc += term
        if variant == "alternating":
            return 2 * acc - mp.log(k)
        return (k - mpf(1) / 2) / (mpf(1) / 4 + t * t) - 2 * acc - mp.log(k)


def rho_abs_sq(t, k: int, ctx: PrecisionContext, *, fast: bool = False) -> mpf:
    """(2/sqrt k) sum_{m<=k} cos(t log(m/k))/sqrt(m), which tends to 1/(1/4 + t^2).

    ``fast=True`` evaluates the sum in double precision with numpy.
    """
    if k < 10:
        raise ValueError("k must be at least 10")
    if fast:
        import numpy as np

        m = np.arange(1, k + 1, dtype=np.float64)
        tf = float(t)
        total = math.fsum(np.cos(tf * np.log(m / k)) / np.sqrt(m))
        with ctx.working():
            return 2 * mpf(total) / mp.sqrt(k)
    with ctx.working(5):
        t = mpf(t)
        lk = mp.log(k)
        acc = mpf(0)
        for m in range(1, k + 1):
            acc += mp.cos(t * (mp.log(m) - lk)) / mp.sqrt(m)
        return 2 * acc / mp.sqrt(k)


def zero_sum_constant(ledger, n: int, ctx: PrecisionContext) -> tuple:
    """(sum_{j<=n} 1/(1/4 + t_j^2), gamma/2 + 1 - log(4 pi)/2)."""
    if n > len(ledger):
        raise ValueError(f"ledger holds {len(ledger)} zeros, {n} requested")
    with ctx.working():
        acc = mpf(0)
        for rec in list(ledger)[:n]:
            t = mpf(rec.t)
            acc += 1 / (mpf(1) / 4 + t * t)
        target = mp.euler / 2 + 1 - mp.log(4 * mp.pi) / 2
        return acc, target


# ---------------------------------------------------------------------------
# Explicit formula

EI_SWITCH = 30


def exp_integral_ei(z) -> mpc:
    """Ei(z) for complex z off the negative real axis.

    Power series for small |z| (with extra digits against cancellation),
    asymptotic series beyond, truncated at its smallest term.  The switch
    sits at |z| = 30, or later if the asymptotic floor e^-|z| would exceed
    the working precision.
    """
    z = mpmath.mpmathify(z)
    r = float(abs(z))
    if r <= max(EI_SWITCH, mp.dps * math.log(10) + 5):
        with mp.workdps(mp.dps + int(r / math.log(10)) + 5):
            acc = mpf(0)
            term = mpf(1)
            k = 1
            tol = mpf(10) ** (-mp.dps)
            while True:
                term = term * z / k
                add = term / k
                acc += add
                if abs(add) < tol * (1 + abs(acc)):
                    break
                k += 1
            value = mp.euler + mp.log(z) + acc
        return +value
    acc = mpf(1)
    term = mpf(1)
    best = mpf("inf")
    for k in range(1, int(r) + 1):
        nxt = term * k / z
        if abs(nxt) >= best:
            break
        best = abs(nxt)
        term = nxt
        acc += term
    value = mp.exp(z) / z * acc
    im = mpmath.im(z)
    if im > 0:
        value += mpc(0, mp.pi)
    elif im < 0:
        value -= mpc(0, mp.pi)
    return value


def logarithmic_integral(x) -> mpf:
    """Li(x) = Ei(log x) for real x > 1 (principal value)."""
    x = mpf(x)
    if x <= 1:
        raise ValueError("Li is taken here for x > 1")
    return mpmath.re(exp_integral_ei(mp.log(x)))


def _tail_integral(x) -> mpf:
    return mpmath.quad(lambda u: 1 / (u * (u * u - 1) * mp.log(u)), [x, mp.inf])


def _zero_values(ledger, n_zeros):
    if ledger is None:
        from .zeros import reference_ledger

        ledger = reference_ledger()
    if n_zeros > len(ledger):
        raise ValueError(f"ledger holds {len(ledger)} zeros, {n_zeros} requested")
    return [mpf(r.t) for r in list(ledger)[:n_zeros]]


def _j_from_zeros(x, ts) -> mpf:
    lx = mp.log(x)
    acc = logarithmic_integral(x) - mp.log(2) + _tail_integral(x)
    for t in ts:
        # Li(x^rho) + Li(x^conj(rho)) = 2 Re Ei(rho log x)
        acc -= 2 * mpmath.re(exp_integral_ei(mpc(mpf(1) / 2, t) * lx))
    return acc


def riemann_J(x, n_zeros: int, ctx: PrecisionContext, ledger=None) -> mpf:
    """J(x) = Li(x) - sum_rho Li(x^rho) - log 2 + int_x^inf dt/(t(t^2-1) log t).

    Zeros enter in conjugate pairs; the first ``n_zeros`` ordinates come from
    ``ledger`` (default: the bundled reference zeros).
    """
    with ctx.working():
        x = mpf(x)
        if x <= 1:
            raise ValueError("J(x) is evaluated for x > 1")
        return _j_from_zeros(x, _zero_values(ledger, n_zeros))


def pi_from_J(x, n_zeros: int, ctx: PrecisionContext, ledger=None) -> mpf:
    """pi(x) = sum_n mu(n)/n J(x^(1/n)), stopping once x^(1/n) < 2."""
    with ctx.working():
        x = mpf(x)
        if x <= 2:
            raise ValueError("pi_from_J needs x > 2")
        ts = _zero_values(ledger, n_zeros)
        acc = mpf(0)
        n = 1
        while True:
            y = x ** (mpf(1) / n)
            if y < 2:
                break
            mu = mobius(n)
            if mu:
                acc += mpf(mu) / n * _j_from_zeros(y, ts)
            n += 1
        return acc
