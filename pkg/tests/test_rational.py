from fractions import Fraction
from math import comb

import mpmath
import pytest

from zetarec.rational import bernoulli, euler_number, harmonic, mobius


def _bernoulli_by_recurrence(n):
    # sum_{k<=m} binom(m+1, k) B_k = 0
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b


def _euler_by_recurrence(n):
    # sum_{k even} binom(m, k) E_k = 0 for even m > 0
    e = {0: Fraction(1)}
    for m in range(2, n + 1, 2):
        e[m] = -sum(comb(m, k) * e[k] for k in range(0, m, 2))
    return e


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_bernoulli_matches_recurrence():
    ref = _bernoulli_by_recurrence(120)
    for n in range(121):
        assert bernoulli(n) == ref[n], n


def test_bernoulli_large_against_mpmath():
    for n in (200, 500, 1000):
        assert bernoulli(n) == Fraction(*mpmath.bernfrac(n))


def test_euler_numbers():
    ref = _euler_by_recurrence(80)
    for n in range(0, 81, 2):
        assert euler_number(n) == ref[n]
    assert euler_number(4) == 5
    assert euler_number(10) == -50521
    with pytest.raises(ValueError):
        euler_number(3)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_harmonic_and_mobius():
    assert harmonic(12) == Fraction(86021, 27720)
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
