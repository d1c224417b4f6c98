"""Special functions at arbitrary precision.

Riemann and Hurwitz zeta are evaluated by Euler-Maclaurin summation with an
automatically chosen cutoff and tail length.  The same summation, carried out
on jets, yields the Taylor expansion of zeta about a real point; taking its
logarithm gives the high-order derivatives of ``log|zeta|`` at 1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import mpmath
from mpmath import mp, mpc, mpf

from .jet import Jet, jet_log, jet_mul, mul_linear, power_jet
from .precision import PrecisionContext, PrecisionRefused
from .rational import bernoulli

T1_APPROX = 14.134725141734693
LOG2PI = math.log(2 * math.pi)
LN10 = math.log(10)


@dataclass(frozen=True)
class EulerMaclaurinPlan:
    """Cutoff ``N`` for the direct sum and number ``K`` of Bernoulli tail terms."""

    cutoff: int
    tail_terms: int

    def __post_init__(self):
        if self.cutoff < 1 or self.tail_terms < 1:
            raise ValueError("cutoff and tail_terms must be positive")


def _log10_omitted_term(n_cut: float, k: int, s_abs: float, sigma: float) -> float:
    # |B_2j|/(2j)! * |(s)_(2j-1)| * N^(-sigma-2j+1) with j = k+1, B_2j/(2j)! ~ 2/(2 pi)^2j
    j2 = 2 * (k + 1)
    sa = max(s_abs, 1.0)
    log_b = math.log(2.0) - j2 * LOG2PI
    log_poch = math.lgamma(sa + j2 - 1) - math.lgamma(sa)
    log_pow = (-sigma - j2 + 1) * math.log(n_cut)
    return (log_b + log_poch + log_pow) / LN10


def choose_plan(
    s_abs: float,
    sigma: float,
    digits: int,
    *,
    shift: float = 0.0,
    main_weight: float = 1.0,
    tail_weight: float = 1.0,
    max_tail: int = 4000,
) -> EulerMaclaurinPlan:
    """Cheapest plan whose first omitted tail term is below ``10^-digits``.

    ``shift`` offsets the summation variable (Hurwitz parameter), ``sigma`` is
    the smallest real part to be covered and ``s_abs`` the largest modulus.
    The error estimate (twice the first omitted term) is heuristic.
    """
    target = -digits - math.log10(2.0)
    best = None
    n = max(2, int(math.ceil(s_abs / (2 * math.pi))) // 4 + 2)
    while n < 10**7:
        base = n + shift
        prev = math.inf
        for k in range(1, max_tail + 1):
            b = _log10_omitted_term(base, k, s_abs, sigma)
            if b < target:
                cost = n * main_weight + k * tail_weight
                if best is None or cost < best[0]:
                    best = (cost, EulerMaclaurinPlan(n, k))
                break
            if b > prev:
                break
            prev = b
        if best is not None and n * main_weight > best[0]:
            break
        n = int(n * 1.25) + 1
    if best is None:
        raise PrecisionRefused("no Euler-Maclaurin plan reaches the requested accuracy", digits)
    return best[1]


def _bernoulli_over_factorial(j: int) -> mpf:
    b = bernoulli(2 * j)
    return mpf(b.numerator) / mpf(b.denominator) / mp.factorial(2 * j)


# ---------------------------------------------------------------------------
# Riemann zeta


def _as_complex(s):
    s = mpmath.mpmathify(s)
    return s


def zeta(s, ctx: PrecisionContext, *, method: str = "euler-maclaurin", plan: EulerMaclaurinPlan | None = None):
    """Riemann zeta for Re(s) > 0 (Euler-Maclaurin also covers Re(s) <= 0).

    ``method`` is ``"euler-maclaurin"`` (default), ``"alternating"`` (accelerated
    eta series) or ``"series"`` (the defining series, Re(s) > 1, small
    precision only).  Returns an mpf for real input and an mpc otherwise.
    """
    with ctx.working():
        s = _as_complex(s)
        if s == 1:
            raise ValueError("zeta has a pole at s = 1")
        if method == "euler-maclaurin":
            value = _zeta_em(s, plan)
        elif method == "alternating":
            value = _zeta_alternating(s)
        elif method == "series":
            value = _zeta_series(s)
        else:
            raise ValueError(f"unknown zeta method {method!r}")
        if isinstance(s, mpf) and isinstance(value, mpc):
            value = value.real
        return value


def _zeta_em(s, plan=None, shift=0):
    w = mp.dps + 5
    with mp.workdps(w):
        sig = float(mpmath.re(s))
        sabs = float(abs(s))
        if plan is None:
            plan = choose_plan(sabs, sig, w, shift=float(shift), main_weight=8.0, tail_weight=1.0)
        n_cut, k_tail = plan.cutoff, plan.tail_terms
        acc = mpf(0)
        for k in range(n_cut):
            base = k + shift
            if base == 0:
                continue
            acc += mp.power(base, -s)
        big_n = mpf(n_cut) + shift
        n_pow = mp.power(big_n, -s)
        acc += big_n * n_pow / (s - 1) + n_pow / 2
        poch = s
        inv_n2 = 1 / (big_n * big_n)
        term_pow = n_pow / big_n
        for j in range(1, k_tail + 1):
            acc += _bernoulli_over_factorial(j) * poch * term_pow
            poch *= (s + 2 * j - 1) * (s + 2 * j)
            term_pow *= inv_n2
        return +acc


def _borwein_terms(digits: int, t_abs: float) -> int:
    extra = math.log10(3 * (1 + 2 * t_abs)) + t_abs * math.pi / 2 / LN10
    return int(math.ceil((digits + extra) / math.log10(3 + math.sqrt(8)))) + 1


def _alternating_sum(term, n_terms: int):
    """Cohen-Villegas-Zagier acceleration of ``sum_{k>=0} (-1)^k term(k)``."""
    n = n_terms
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    acc = mpf(0)
    for k in range(n):
        c = b - c
        acc += c * term(k)
        b = b * (k + n) * (k - n) / ((k + mpf(1) / 2) * (k + 1))
    return acc / d


def _zeta_alternating(s):
    factor = 1 - mp.power(2, 1 - s)
    if abs(factor) < mpf(10) ** (-mp.dps // 2):
        raise ValueError("alternating series is undefined where 2^(1-s) = 1")
    w = mp.dps + 10
    with mp.workdps(w):
        n = _borwein_terms(w, float(abs(mpmath.im(s))))
        eta = _alternating_sum(lambda k: mp.power(k + 1, -s), n)
        return eta / factor


def _zeta_series(s, max_terms: int = 10**6):
    sig = mpmath.re(s)
    if sig <= 1:
        raise ValueError("the defining series needs Re(s) > 1")
    # Tail after N terms is below N^(1-sigma)/(sigma-1).
    need = (mp.dps * LN10 + math.log(float(1 / (sig - 1)))) / float(sig - 1)
    if need > math.log(max_terms):
        raise PrecisionRefused("defining series too slow at this precision", int((sig - 1) * math.log10(max_terms)))
    n = int(math.exp(need)) + 1
    acc = mpf(0)
    for k in range(1, n + 1):
        acc += mp.power(k, -s)
    return acc


def zeta_laurent(s, n_terms: int, stieltjes_in: Sequence, ctx: PrecisionContext):
    """``1/(s-1) + sum_{n<n_terms} (-1)^n gamma_n (s-1)^n / n!``."""
    if len(stieltjes_in) < n_terms:
        raise ValueError(f"need {n_terms} Stieltjes constants, got {len(stieltjes_in)}")
    with ctx.working():
        s = _as_complex(s)
        if s == 1:
            raise ValueError("zeta has a pole at s = 1")
        d = s - 1
        acc = 1 / d
        p = mpf(1)
        for n in range(n_terms):
            acc += (-1) ** n * mpf(stieltjes_in[n]) * p
            p = p * d / (n + 1)
        return acc


# ---------------------------------------------------------------------------
# Hurwitz zeta and Dirichlet beta


def hurwitz_zeta(s, a, ctx: PrecisionContext):
    """zeta(s, a) = sum_{k>=0} (k + a)^-s for real s > 1, a > 0."""
    with ctx.working():
        s = mpf(s)
        a = mpf(a)
        if s <= 1:
            raise ValueError("hurwitz_zeta is implemented for s > 1")
        if a <= 0:
            raise ValueError("hurwitz_zeta needs a > 0")
        return _zeta_em(s, shift=a)


def dirichlet_beta(s, ctx: PrecisionContext, *, method: str = "alternating", max_prime: int = 10**7):
    """Dirichlet beta function ``sum (-1)^n (2n+1)^-s`` for real s > 0.

    ``method="euler-product"`` multiplies ``(1 - chi_4(p) p^-s)^-1`` over odd
    primes until the omitted factors are below the working precision (s > 1).
    """
    with ctx.working():
        s = mpf(s)
        if s <= 0:
            raise ValueError("dirichlet_beta is implemented for s > 0")
        if method == "alternating":
            w = mp.dps + 10
            with mp.workdps(w):
                return +_alternating_sum(lambda k: mp.power(2 * k + 1, -s), _borwein_terms(w, 0.0))
        if method == "euler-product":
            if s <= 1:
                raise ValueError("the Euler product needs s > 1")
            from .primes import primes_up_to

            limit = mpf(10) ** (mpf(mp.dps + 2) / (s - 1))
            if limit > max_prime:
                raise PrecisionRefused("Euler product for beta needs too many primes", int((s - 1) * math.log10(max_prime)))
            acc = mpf(1)
            for p in primes_up_to(max(3, int(limit) + 1)).primes[1:]:
                chi = 1 if p % 4 == 1 else -1
                acc *= 1 - chi * mp.power(p, -s)
            return 1 / acc
        raise ValueError(f"unknown beta method {method!r}")


# ---------------------------------------------------------------------------
# Jets of zeta and log|zeta|


def zeta_jet(center, order: int, ctx: PrecisionContext, plan: EulerMaclaurinPlan | None = None) -> Jet:
    """Taylor coefficients of zeta about a real ``center != 1`` up to ``order``.

    Every term of the Euler-Maclaurin formula is expanded in ``x = s - center``;
    the terms ``n^-s`` contribute ``n^-center (-log n)^k / k!``.
    """
    with ctx.working(5):
        c = mpf(center)
        if c == 1:
            raise ValueError("zeta has a pole at s = 1")
        if plan is None:
            # Bound coefficients via a circle of radius 1 around the center.
            plan = choose_plan(abs(float(c)) + 1.0, float(c) - 1.0, mp.dps + 2, main_weight=1.0, tail_weight=3.0)
        n_cut, k_tail = plan.cutoff, plan.tail_terms
        acc = [mpf(0)] * (order + 1)
        for n in range(1, n_cut):
            pj = power_jet(n, c, order).coeffs
            for k in range(order + 1):
                acc[k] += pj[k]
        big_n = mpf(n_cut)
        e_jet = power_jet(big_n, c, order, center=c)
        # N^(1-s)/(s-1) = N * N^-s * 1/(x + c - 1)
        d = c - 1
        inv = [(-1) ** j / d ** (j + 1) for j in range(order + 1)]
        pole = jet_mul(e_jet, Jet(c, tuple(inv)))
        for k in range(order + 1):
            acc[k] += big_n * pole.coeffs[k] + e_jet.coeffs[k] / 2
        # Bernoulli tail: sum_j B_2j/(2j)! (s)_(2j-1) N^(1-2j) * N^-s
        poch = Jet(c, (c, mpf(1)) + (mpf(0),) * (order - 1)) if order >= 1 else Jet(c, (c,))
        tail = [mpf(0)] * (order + 1)
        scale = 1 / big_n
        inv_n2 = scale * scale
        for j in range(1, k_tail + 1):
            coef = _bernoulli_over_factorial(j) * scale
            pc = poch.coeffs
            for k in range(order + 1):
                tail[k] += coef * pc[k]
            poch = mul_linear(mul_linear(poch, c + 2 * j - 1), c + 2 * j)
            scale *= inv_n2
        tail_jet = jet_mul(Jet(c, tuple(tail)), e_jet)
        for k in range(order + 1):
            acc[k] += tail_jet.coeffs[k]
        return Jet(c, tuple(acc))


def precision_budget(m: int, target_digits: int = 10, t_est: float = T1_APPROX) -> int:
    """Working digits needed to extract ``target_digits`` of Z(2m)-type results.

    The 2m-th derivative term is of size ``4^m`` while the result is of size
    ``t^-2m``; the difference cancels and must be paid for in advance.
    """
    return target_digits + int(math.ceil(2 * m * (math.log10(4) + math.log10(t_est)))) + 25


def log_zeta_jet(
    m: int,
    ctx: PrecisionContext,
    *,
    target_digits: int = 10,
    order: int | None = None,
    t_est: float = T1_APPROX,
) -> Jet:
    """Jet of ``log|zeta|`` about 1/2 of order ``2m`` (or ``order``).

    zeta(1/2) < 0 and zeta has no real zeros in (0, 1), so ``log|zeta|`` equals
    ``log(-zeta)`` on a neighbourhood and is computed as ``jet_log`` of the
    negated zeta jet.
    """
    if m < 1:
        raise ValueError("m must be positive")
    need = precision_budget(m, target_digits, t_est)
    if ctx.working_digits < need:
        raise PrecisionRefused(f"log|zeta| jet of order {2 * m} for {target_digits} target digits", need)
    order = 2 * m if order is None else order
    zj = zeta_jet(mpf(1) / 2, order, ctx)
    with ctx.working(5):
        return jet_log(-zj)


def log_abs_zeta_derivative(k: int, ctx: PrecisionContext, **kw) -> mpf:
    """``(log|zeta|)^(k)(1/2)``."""
    jet = log_zeta_jet((k + 1) // 2, ctx, order=k, **kw)
    with ctx.working(5):
        return jet.derivative(k)


# ---------------------------------------------------------------------------
# Gamma, ball constant, Lambert W


def gamma_fn(s, ctx: PrecisionContext):
    with ctx.working():
        s = _as_complex(s)
        if mpmath.im(s) == 0 and mpmath.re(s) <= 0 and mpmath.re(s) == mpmath.floor(mpmath.re(s)):
            raise ValueError("Gamma has poles at non-positive integers")
        return mpmath.gamma(s)


def ball_constant(n, ctx: PrecisionContext) -> mpf:
    """Volume factor K(n) = pi^(n/2) / Gamma(1 + n/2) of the n-ball."""
    with ctx.working():
        n = mpf(n)
        return mp.pi ** (n / 2) / mpmath.gamma(1 + n / 2)


def lambert_w(x, ctx: PrecisionContext) -> mpf:
    """Principal branch of Lambert W by Halley iteration."""
    with ctx.working(5):
        x = mpf(x)
        branch_pt = -1 / mp.e
        if x < branch_pt:
            raise ValueError("lambert_w is real only for x >= -1/e")
        if x == 0:
            return mpf(0)
        if x == branch_pt:
            return mpf(-1)
        if x < 1:
            p = mp.sqrt(2 * (mp.e * x + 1))
            w = -1 + p - p * p / 3 if x < -0.25 else mp.log1p(x)
        else:
            l1 = mp.log(x)
            l2 = mp.log(l1) if l1 > 1 else mpf(0)
            w = l1 - l2 + (l2 / l1 if l1 > 1 else 0)
        tol = mpf(10) ** (-mp.dps + 3)
        for _ in range(200):
            ew = mp.exp(w)
            f = w * ew - x
            wp1 = w + 1
            step = f / (ew * wp1 - (w + 2) * f / (2 * wp1))
            w -= step
            if abs(step) <= tol * (1 + abs(w)):
                break
        else:
            raise ArithmeticError("Halley iteration for W did not converge")
        return w
