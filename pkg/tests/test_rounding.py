"""Directed-rounding primitives: soundness and exactness."""

from fractions import Fraction

import numpy as np
import pytest

from carlreach.rounding import (
    add_down,
    add_up,
    interval_mul,
    interval_pow,
    mul_down,
    mul_up,
    sub_down,
    sub_up,
)


def test_exact_operations_stay_exact():
    assert float(add_down(0.5, 1.0)) == 1.5 == float(add_up(0.5, 1.0))
    assert float(mul_down(2.0, 3.0)) == 6.0 == float(mul_up(2.0, 3.0))
    assert float(sub_down(1.5, 0.25)) == 1.25 == float(sub_up(1.5, 0.25))
    assert float(mul_down(0.0, 1e300)) == 0.0 == float(mul_up(0.0, 1e300))


def test_inexact_operations_bracket_the_true_value():
    # 1 + 1e-20 is not representable; bounds must straddle it
    assert float(add_down(1.0, 1e-20)) == 1.0
    assert float(add_up(1.0, 1e-20)) == np.nextafter(1.0, np.inf)
    # 0.1 * 0.1 rounds; the true product of the doubles is above fl
    lo, hi = float(mul_down(0.1, 0.1)), float(mul_up(0.1, 0.1))
    true = Fraction(0.1) * Fraction(0.1)
    assert Fraction(lo) <= true <= Fraction(hi)
    assert hi == np.nextafter(lo, np.inf)  # 1-ulp wide


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_randomized_soundness_against_exact_rationals(seed):
    rng = np.random.default_rng(seed)
    for _ in range(2000):
        a = float(rng.normal()) * 10.0 ** int(rng.integers(-10, 10))
        b = float(rng.normal()) * 10.0 ** int(rng.integers(-10, 10))
        assert Fraction(float(add_down(a, b))) <= Fraction(a) + Fraction(b)
        assert Fraction(float(add_up(a, b))) >= Fraction(a) + Fraction(b)
        assert Fraction(float(mul_down(a, b))) <= Fraction(a) * Fraction(b)
        assert Fraction(float(mul_up(a, b))) >= Fraction(a) * Fraction(b)


def test_interval_mul_covers_endpoint_products():
    rng = np.random.default_rng(3)
    for _ in range(500):
        lo1, hi1 = sorted(rng.normal(size=2) * 10)
        lo2, hi2 = sorted(rng.normal(size=2) * 10)
        lo, hi = interval_mul(lo1, hi1, lo2, hi2)
        for x in np.linspace(lo1, hi1, 7):
            for y in np.linspace(lo2, hi2, 7):
                assert lo <= x * y <= hi


def test_interval_pow_even_sign_crossing_is_nonnegative():
    lo, hi = interval_pow(-0.1, 0.1, 2)
    assert float(lo) == 0.0
    assert 0.01 <= float(hi) <= np.nextafter(0.01, np.inf)


def test_interval_pow_matches_sampling():
    rng = np.random.default_rng(4)
    for _ in range(200):
        a, b = sorted(rng.normal(size=2) * 3)
        m = int(rng.integers(1, 6))
        lo, hi = interval_pow(a, b, m)
        xs = np.linspace(a, b, 33)
        vals = xs.astype(np.float64) ** m
        assert float(lo) <= vals.min() + 1e-12 * max(1.0, abs(vals.min()))
        assert float(hi) >= vals.max() - 1e-12 * max(1.0, abs(vals.max()))


def test_interval_pow_rejects_order_zero():
    with pytest.raises(ValueError):
        interval_pow(0.0, 1.0, 0)


def test_vectorized_broadcasting():
    a = np.array([0.1, 2.0, -0.3])
    b = np.array([0.1, 3.0, 0.7])
    lo, hi = mul_down(a, b), mul_up(a, b)
    assert lo.shape == (3,)
    assert np.all(lo <= a * b) and np.all(hi >= a * b)
