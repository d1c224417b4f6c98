"""Secondary zeta function Z(s) = sum t_n^-s over zero ordinates.

Even values come from closed forms in the 2m-th derivative of log|zeta| at
1/2, which need no zeros at all.  All three forms below are the same number;
they differ only in how the remaining series

    S(2m) = sum_{k>=1} (1/2 + 2k)^-2m = 4^-m zeta(2m, 5/4)
          = 1/2 [(4^m - 1) zeta(2m) + 4^m beta(2m)] - 4^m

is evaluated.  Each needs about 2m*log10(4 t) digits of headroom: the
bracket holds terms of size 4^m whose difference is ~ t_1^-2m.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from mpmath import mp, mpf

from .precision import PrecisionContext, PrecisionRefused
from .specfun import T1_APPROX, dirichlet_beta, hurwitz_zeta, log_zeta_jet, precision_budget, zeta

VARIANTS = ("voros", "series", "hurwitz")
SERIES_TERM_CAP = 200_000

_lock = threading.Lock()
_jets: dict = {}  # working digits -> highest-order log|zeta| jet computed so far
_values: dict = {}


def clear_caches() -> None:
    with _lock:
        _jets.clear()
        _values.clear()


@dataclass(frozen=True)
class ZEvenRequest:
    m: int
    variant: str = "hurwitz"
    ctx: PrecisionContext = PrecisionContext(100)
    target_digits: int = 10
    t_est: float = T1_APPROX

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")


def log_zeta_even_derivative(m: int, ctx: PrecisionContext, *, target_digits: int = 10, t_est: float = T1_APPROX) -> mpf:
    """(log|zeta|)^(2m)(1/2) / (2m-1)!, drawn from a cached jet when possible."""
    need = precision_budget(m, target_digits, t_est)
    if ctx.working_digits < need:
        raise PrecisionRefused(f"Z({2 * m}) for {target_digits} target digits", need)
    key = ctx.working_digits
    jet = _jets.get(key)
    if jet is None or jet.order < 2 * m:
        jet = log_zeta_jet(m, ctx, target_digits=target_digits, t_est=t_est)
        with _lock:
            old = _jets.get(key)
            if old is None or old.order < jet.order:
                _jets[key] = jet
    with ctx.working(5):
        # f^(2m)/(2m-1)! = 2m * coeff_2m
        return 2 * m * jet.coeffs[2 * m]


def _series_direct(m: int) -> mpf | None:
    # Tail after term K is below int_K^inf (1/2 + 2x)^-2m dx.
    two_m = 2 * m
    log_tol = -mp.dps * math.log(10)
    # (1/2 + 2K)^(1-2m) / (2(2m-1)) < 10^-dps * 2.5^-2m  (relative to the first term)
    rhs = log_tol - two_m * math.log(2.5) + math.log(2 * (two_m - 1))
    k_needed = math.exp(rhs / (1 - two_m)) / 2
    if k_needed > SERIES_TERM_CAP:
        return None
    acc = mpf(0)
    for k in range(1, int(k_needed) + 2):
        acc += mp.power(mpf(1) / 2 + 2 * k, -two_m)
    return acc


def shifted_series(m: int, variant: str, ctx: PrecisionContext) -> mpf:
    """S(2m) evaluated the way ``variant`` prescribes."""
    with ctx.working(5):
        four_m = mpf(4) ** m
        if variant == "hurwitz":
            return hurwitz_zeta(2 * m, mpf(5) / 4, ctx) / four_m
        if variant == "voros":
            z = zeta(mpf(2 * m), ctx)
            b = dirichlet_beta(2 * m, ctx)
            return ((four_m - 1) * z + four_m * b) / 2 - four_m
        if variant == "series":
            s = _series_direct(m)
            if s is None:
                return hurwitz_zeta(2 * m, mpf(5) / 4, ctx) / four_m
            return s
    raise ValueError(f"unknown variant {variant!r}")


def z_even(req: ZEvenRequest) -> mpf:
    """Z(2m) = (-1)^(m+1)/2 * [D_2m/(2m-1)! + S(2m) - 4^m]."""
    key = (req.m, req.variant, req.ctx.digits, req.ctx.guard)
    hit = _values.get(key)
    if hit is not None:
        return hit
    m, ctx = req.m, req.ctx
    d = log_zeta_even_derivative(m, ctx, target_digits=req.target_digits, t_est=req.t_est)
    s = shifted_series(m, req.variant, ctx)
    with ctx.working(5):
        value = (-1) ** (m + 1) * (d + s - mpf(4) ** m) / 2
    with _lock:
        _values[key] = value
    return value


def z_from_products(m: int, n_primes: int, ctx: PrecisionContext, *, target_digits: int = 10, t_est: float = T1_APPROX) -> mpf:
    """Z(2m) with (1 - 4^-m) zeta(2m) and beta(2m) replaced by Euler products.

    Both products run over the primes p_2..p_(n_primes), i.e. the odd primes.
    """
    from .primes import first_primes

    if n_primes < 2:
        raise ValueError("need at least two primes")
    d = log_zeta_even_derivative(m, ctx, target_digits=target_digits, t_est=t_est)
    with ctx.working(5):
        p1 = mpf(1)
        p2 = mpf(1)
        for p in first_primes(n_primes)[1:]:
            u = mp.exp(-2 * m * mp.log(p))
            p1 *= 1 - u
            p2 *= 1 - u if p % 4 == 1 else 1 + u
        four_m = mpf(4) ** m
        bracket = d - 2 * four_m + four_m / 2 * (1 / p1 + 1 / p2)
        return (-1) ** (m + 1) * bracket / 2


def z_partial(zeros, n: int, s, ctx: PrecisionContext, *, min_certified: int | None = None) -> mpf:
    """Z_n(s) = sum_{k<=n} t_k^-s over the first ``n`` records of a zero ledger."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > len(zeros):
        raise ValueError(f"ledger holds {len(zeros)} zeros, {n} requested")
    with ctx.working(5):
        s = mpf(s)
        acc = mpf(0)
        for rec in list(zeros)[:n]:
            if min_certified is not None and rec.certified_digits < min_certified:
                raise PrecisionRefused(
                    f"zero t_{rec.index} carries {rec.certified_digits} certified digits", min_certified
                )
            acc += mp.exp(-s * mp.log(mpf(rec.t)))
        return acc


def z_variants_agree(m: int, ctx: PrecisionContext, *, max_m: int = 200) -> dict:
    """Values of all variants of Z(2m) and their largest pairwise relative deviation."""
    if m > max_m:
        raise ValueError(f"m={m} exceeds the configured bound {max_m}")
    values = {v: z_even(ZEvenRequest(m, v, ctx)) for v in VARIANTS}
    with ctx.working(5):
        vals = list(values.values())
        dev = max(abs(a - b) for a in vals for b in vals) / abs(vals[0])
    return {"m": m, "values": values, "max_relative_deviation": dev}
