import math

import mpmath
import pytest
from mpmath import mp, mpc, mpf

from zetarec.precision import PrecisionContext, PrecisionRefused
from zetarec.rational import euler_number
from zetarec.specfun import (
    ball_constant,
    choose_plan,
    dirichlet_beta,
    gamma_fn,
    hurwitz_zeta,
    lambert_w,
    log_abs_zeta_derivative,
    log_zeta_jet,
    precision_budget,
    zeta,
    zeta_jet,
    zeta_laurent,
)

CTX = PrecisionContext(50)


def rel(a, b):
    return abs(a - b) / abs(b)


@pytest.mark.parametrize("s", [2, 3.5, 0.5, -2.5, mpc(0.5, 14.1), mpc(2, 30), mpc(0.3, -5)])
def test_zeta_matches_mpmath(s):
    with mp.workdps(70):
        ref = mpmath.zeta(s)
        assert rel(zeta(s, CTX), ref) < mpf(10) ** -48


@pytest.mark.parametrize("s", [2, 0.5, mpc(0.5, 21.02), mpc(3, 10)])
def test_zeta_methods_agree(s):
    a = zeta(s, CTX)
    b = zeta(s, CTX, method="alternating")
    with mp.workdps(60):
        assert rel(a, b) < mpf(10) ** -45


def test_zeta_series_and_errors():
    ctx = PrecisionContext(12)
    with mp.workdps(20):
        assert rel(zeta(8, ctx, method="series"), mpmath.zeta(8)) < mpf(10) ** -11
    with pytest.raises(ValueError):
        zeta(1, CTX)
    with pytest.raises(ValueError):
        zeta(2, CTX, method="nope")


def test_plan_is_sane():
    plan = choose_plan(100.0, 0.5, 200)
    assert plan.cutoff > 1 and plan.tail_terms >= 1


def test_hurwitz_and_beta():
    with mp.workdps(70):
        assert rel(hurwitz_zeta(6, mpf(5) / 4, CTX), mpmath.zeta(6, mpf(5) / 4)) < mpf(10) ** -48
        catalan = mp.catalan
        assert rel(dirichlet_beta(2, CTX), catalan) < mpf(10) ** -48
        ref = mpmath.dirichlet(5, [0, 1, 0, -1])
        assert rel(dirichlet_beta(5, CTX), ref) < mpf(10) ** -48
    ctx = PrecisionContext(20)
    with mp.workdps(30):
        assert rel(dirichlet_beta(30, ctx, method="euler-product"), dirichlet_beta(30, ctx)) < mpf(10) ** -19
    with pytest.raises(ValueError):
        hurwitz_zeta(1, 1, CTX)


def test_laurent_expansion_near_one():
    with mp.workdps(60):
        gammas = [mpmath.stieltjes(n) for n in range(30)]
        s = mpf("1.3")
        assert rel(zeta_laurent(s, 30, gammas, CTX), mpmath.zeta(s)) < mpf(10) ** -20


def test_zeta_jet_matches_derivatives():
    ctx = PrecisionContext(60)
    jet = zeta_jet(mpf(1) / 2, 12, ctx)
    with mp.workdps(80):
        for k in (0, 1, 5, 12):
            ref = mpmath.zeta(mpf(1) / 2, derivative=k)
            assert rel(jet.derivative(k), ref) < mpf(10) ** -50


def test_log_jet_refuses_without_budget():
    with pytest.raises(PrecisionRefused) as exc:
        log_zeta_jet(100, PrecisionContext(100))
    assert exc.value.required_digits == precision_budget(100)


@pytest.mark.parametrize("m", [1, 3, 6])
def test_odd_log_derivative_closed_form(m):
    ctx = PrecisionContext(120)
    d = log_abs_zeta_derivative(2 * m + 1, ctx)
    with mp.workdps(130):
        e = abs(euler_number(2 * m))
        closed = mp.factorial(2 * m) * (2 ** (2 * m + 1) - 1) * mpmath.zeta(2 * m + 1) / 2 + mp.pi ** (2 * m + 1) * e / 4
        assert rel(d, closed) < mpf(10) ** -90


def test_gamma_ball_lambert():
    with mp.workdps(60):
        assert rel(ball_constant(3, CTX), 4 * mp.pi / 3) < mpf(10) ** -48
        assert rel(gamma_fn(mpc(0.5, 3), CTX), mpmath.gamma(mpc(0.5, 3))) < mpf(10) ** -48
        for x in (mpf("-0.3"), mpf("0.1"), mpf(10), mpf(10) ** 50):
            assert rel(lambert_w(x, CTX), mpmath.lambertw(x).real) < mpf(10) ** -45
    with pytest.raises(ValueError):
        gamma_fn(-2, CTX)
    with pytest.raises(ValueError):
        lambert_w(-1, CTX)


def test_budget_grows_with_m():
    assert precision_budget(10) < precision_budget(20)
    assert precision_budget(250) > 2 * 250 * math.log10(4 * 14)
