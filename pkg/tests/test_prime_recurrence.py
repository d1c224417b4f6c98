import mpmath
import pytest
from mpmath import mp, mpf

from zetarec.precision import NumericFailure, PrecisionContext, PrecisionRefused
from zetarec.prime_recurrence import (
    golomb_next_prime,
    golomb_variant_next_prime,
    prime_zeta,
    prime_zeta_value,
    pzeta_next_prime,
)
from zetarec.primes import first_primes

CTX = PrecisionContext(40)
PRIMES = first_primes(11)


@pytest.mark.parametrize("n", range(10))
def test_golomb_lies_below_next_prime(n):
    assert golomb_next_prime(n, 100, CTX) < PRIMES[n]


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 7, 8])
def test_golomb_within_a_millionth(n):
    # n=6 and n=9 sit further out (p_(n+2) is close to p_(n+1)); the
    # printed reference values there are 16.9999974... and 28.99963...
    assert PRIMES[n] - golomb_next_prime(n, 100, CTX) < mpf(10) ** -6


@pytest.mark.parametrize("n", range(9))
def test_golomb_rounds_to_next_prime(n):
    assert round(float(golomb_next_prime(n, 100, CTX))) == PRIMES[n]


@pytest.mark.parametrize("n", range(10))
def test_golomb_and_pzeta_agree(n):
    a = golomb_next_prime(n, 100, CTX)
    b = pzeta_next_prime(n, 100, CTX)
    assert abs(a - b) / a < mpf(10) ** -10


@pytest.mark.parametrize("n", range(10))
def test_error_decreases_along_s(n):
    errs = [abs(golomb_next_prime(n, s, CTX) - PRIMES[n]) for s in (10, 20, 50, 100)]
    assert all(a > b for a, b in zip(errs, errs[1:]))


def test_variant_matches_golomb_in_the_limit():
    for n in (0, 3, 7):
        a = golomb_next_prime(n, 200, CTX)
        b = golomb_variant_next_prime(n, 200, CTX)
        assert abs(a - b) < mpf(10) ** -3


@pytest.mark.parametrize("s", [2, 3, 10, 100])
def test_prime_zeta_modes(s):
    ctx = PrecisionContext(30)
    with mp.workdps(40):
        ref = mpmath.primezeta(s)
        m = prime_zeta(s, ctx, mode="mobius-log")
        assert abs(m - ref) / ref < mpf(10) ** -28
        if s >= 10:
            d = prime_zeta_value(s, ctx, mode="direct")
            assert abs(d.value - ref) / ref < mpf(10) ** -28
            assert d.error_bound < mpf(10) ** -28 * ref


def test_nested_radical_is_only_approximate():
    ctx = PrecisionContext(30)
    v = prime_zeta_value(2, ctx, mode="nested-radical")
    with mp.workdps(40):
        # the radical truncates 1/zeta after products of two primes
        assert abs(v.value - mpmath.primezeta(2)) > mpf(10) ** -3
        big = prime_zeta(40, ctx, mode="nested-radical")
        assert abs(big - mpmath.primezeta(40)) / mpmath.primezeta(40) < mpf(10) ** -10
    assert mpmath.isnan(v.error_bound)


def test_printed_mobius_form_differs():
    ctx = PrecisionContext(30)
    a = prime_zeta(10, ctx, mode="mobius-log")
    b = prime_zeta(10, ctx, mode="mobius-log", printed_form=True)
    assert abs(a - b) > mpf("0.5")


def test_argument_validation():
    with pytest.raises(ValueError):
        golomb_next_prime(-1, 10, CTX)
    with pytest.raises(ValueError):
        golomb_next_prime(1, 1, CTX)
    with pytest.raises(ValueError):
        prime_zeta(3, CTX, mode="bogus")
    with pytest.raises(PrecisionRefused):
        pzeta_next_prime(5, 3, PrecisionContext(40), mode="direct", prime_cap=10_000)


def test_refuses_noise_radicand():
    from zetarec.prime_recurrence import _root

    with pytest.raises(NumericFailure):
        _root(mpf(0), 10)
