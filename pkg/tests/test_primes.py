import mpmath
import pytest
from mpmath import mp, mpf

from zetarec.precision import PrecisionContext
from zetarec.primes import (
    euler_product_arg,
    euler_product_modulus,
    euler_product_polar,
    first_primes,
    nth_prime,
    partial_euler_product,
    partial_prime_zeta,
    primes_up_to,
)

CTX = PrecisionContext(40)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_sieve_against_trial_division():
    table = primes_up_to(5000)
    assert table[0] == 2
    assert list(table) == [n for n in range(5001) if _is_prime(n)]
    assert all(a < b for a, b in zip(table, list(table)[1:]))


def test_nth_prime_regrows_table():
    assert nth_prime(1) == 2
    assert nth_prime(1000) == 7919
    assert nth_prime(100000) == 1299709
    assert len(first_primes(10)) == 10
    with pytest.raises(ValueError):
        nth_prime(0)


def test_partial_product_monotone_below_zeta():
    s = 3
    prev = mpf(0)
    z = mpmath.zeta(s)
    with mp.workdps(50):
        for n in range(0, 40):
            q = partial_euler_product(n, s, CTX)
            assert prev < q < z
            prev = q


def test_prime_zeta_tail_between_bounds():
    s = 4
    with mp.workdps(50):
        full = mpmath.primezeta(s)
        for n in (1, 5, 20):
            tail = full - partial_prime_zeta(n, s, CTX)
            p_next = first_primes(n + 1)[-1]
            # sum_{j >= p} j^-s < p^-s + p^(1-s)/(s-1)
            bound = mpf(p_next) ** -s + mpf(p_next) ** (1 - s) / (s - 1)
            assert 0 < tail < bound


@pytest.mark.parametrize("sigma,t", [(2, 0), (3, 0), (2, 5), (mpf("2.5"), 7)])
def test_euler_products_converge_to_zeta(sigma, t):
    with mp.workdps(50):
        ref = mpmath.zeta(mpmath.mpc(sigma, t))
        r = euler_product_modulus(sigma, t, 3000, CTX)
        a = euler_product_arg(sigma, t, 3000, CTX)
        assert abs(r - abs(ref)) / abs(ref) < mpf(10) ** -4
        assert abs(a - mpmath.arg(ref)) < mpf(10) ** -3
        z = euler_product_polar(sigma, t, 3000, CTX)
        assert abs(z - ref) / abs(ref) < mpf(10) ** -3


def test_modulus_monotone_at_t0():
    with mp.workdps(50):
        vals = [euler_product_modulus(2, 0, n, CTX) for n in (1, 2, 5, 10, 50)]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        closed = euler_product_modulus(2, 0, 50, CTX, integer_form=True)
        generic = euler_product_modulus(2, 0, 50, CTX, integer_form=False)
        assert abs(closed - generic) < mpf(10) ** -35
