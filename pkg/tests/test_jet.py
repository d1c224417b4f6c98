import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from zetarec.jet import Jet, jet_exp, jet_log, jet_mul, jet_reciprocal, mul_linear, power_jet

coeff = st.floats(min_value=-3, max_value=3, allow_nan=False)


def jets(order=6, positive=True):
    lead = st.floats(min_value=0.5, max_value=4) if positive else coeff
    return st.tuples(lead, st.lists(coeff, min_size=order, max_size=order)).map(
        lambda p: Jet.from_coeffs([p[0]] + p[1])
    )


def close(a: Jet, b: Jet, tol=mpf(10) ** -40):
    return all(abs(x - y) <= tol * (1 + abs(x)) for x, y in zip(a.coeffs, b.coeffs))


@settings(max_examples=40, deadline=None)
@given(jets(), jets())
def test_mul_commutes_and_log_is_additive(a, b):
    with mp.workdps(60):
        assert close(jet_mul(a, b), jet_mul(b, a))
        assert close(jet_log(jet_mul(a, b)), jet_log(a) + jet_log(b))


@settings(max_examples=40, deadline=None)
@given(jets())
def test_exp_inverts_log(a):
    with mp.workdps(60):
        assert close(jet_exp(jet_log(a)), a)
        assert close(jet_mul(a, jet_reciprocal(a)), Jet.constant(1, a.order))


@settings(max_examples=30, deadline=None)
@given(jets(), st.floats(min_value=-2, max_value=2))
def test_mul_linear_matches_full_product(a, c0):
    with mp.workdps(60):
        lin = Jet.from_coeffs([c0, 1] + [0] * (a.order - 1))
        assert close(mul_linear(a, c0), jet_mul(a, lin))


def test_power_jet_matches_derivatives():
    with mp.workdps(50):
        j = power_jet(7, mpf("0.5"), 8)
        for k in range(9):
            d = mpmath.diff(lambda s: mpf(7) ** (-s), mpf("0.5"), k)
            assert abs(j.derivative(k) - d) < mpf(10) ** -40


def test_evaluation_and_shape_errors():
    with mp.workdps(30):
        j = Jet.from_coeffs([1, 2, 3])
        assert j(mpf(2)) == 17
        assert Jet.variable(3, 5).coeffs[:2] == (5, 1)
        with pytest.raises(ValueError):
            jet_mul(j, Jet.from_coeffs([1, 2]))
        with pytest.raises(ValueError):
            jet_log(Jet.from_coeffs([-1, 1]))
        with pytest.raises(ZeroDivisionError):
            jet_reciprocal(Jet.from_coeffs([0, 1]))
        with pytest.raises(ValueError):
            Jet(mpf(0), ())
