import pytest
from mpmath import mp, mpf

from zetarec.precision import (
    PrecisionContext,
    correct_decimals,
    fmt,
    matching_decimals,
    significant_digits,
    truncate_decimals,
)


def test_context_rejects_low_digits():
    with pytest.raises(ValueError):
        PrecisionContext(5)
    with pytest.raises(ValueError):
        PrecisionContext(20, -1)


def test_working_sets_and_restores_precision():
    before = mp.dps
    ctx = PrecisionContext(40, 7)
    with ctx.working(3):
        assert mp.dps == 50
    assert mp.dps == before


def test_widened_and_with_digits():
    ctx = PrecisionContext(30, 5)
    assert ctx.widened(10).digits == 40
    assert ctx.with_digits(60).guard == 5


def test_truncate_not_round():
    with mp.workdps(30):
        assert truncate_decimals(mpf("1.99999999999999999987"), 15) == "1.999999999999999"
        assert truncate_decimals(mpf("-2.5678"), 2) == "-2.56"
        assert truncate_decimals(mpf(3), 0) == "3"


def test_fmt_is_fixed_point_and_repeatable():
    with mp.workdps(30):
        x = mpf(1) / 3 * mpf(10) ** -8
        assert fmt(x, 5) == fmt(x, 5)
        assert "e" not in fmt(x, 5)


def test_digit_counters():
    assert matching_decimals("3.14159", "3.14169") == 3
    assert matching_decimals("2.1", "3.1") == -1
    with mp.workdps(30):
        assert correct_decimals(mpf("1.0002"), 1) == 3
        assert significant_digits(mpf("100.05"), 100) == 3
