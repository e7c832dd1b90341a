"""Outward-rounded floating-point primitives for interval endpoints.

IEEE-754 binary64 addition and multiplication are correctly rounded, so the
sign of the rounding error can be recovered exactly in plain arithmetic:
TwoSum (Knuth) for sums and the Veltkamp/Dekker two-product for products.
Each directed operation below returns the plainly-computed result when it is
exact and otherwise steps one ulp in the sound direction with ``nextafter``.
This keeps exact arithmetic exact (integer grids, powers of two) while every
inexact endpoint is rounded outward, which is what enclosure soundness needs.

The error-free transforms assume no intermediate overflow and a normal
product; outside that range (|x| around 1e308 or below the smallest normal)
the helpers fall back to unconditional outward steps.

All functions broadcast over numpy arrays and preserve scalar inputs.
"""

from __future__ import annotations

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1, Veltkamp splitting constant
_SPLIT_LIMIT = 6.69692879491417e299  # 2**996, beyond this the splitter overflows
_TINY = 2.2250738585072014e-308  # smallest normal double


def _sum_err(a, b, s):
    # Knuth TwoSum: a + b = s + err exactly (no overflow assumed).
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def _prod_err(a, b, p):
    # Dekker two-product: a * b = p + err exactly for normal p.
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    return ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def add_down(a, b):
    """Largest-representable lower bound for a + b."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    s = a + b
    err = _sum_err(a, b, s)
    return np.where(err < 0, np.nextafter(s, -np.inf), s)


def add_up(a, b):
    """Smallest-representable upper bound for a + b."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    s = a + b
    err = _sum_err(a, b, s)
    return np.where(err > 0, np.nextafter(s, np.inf), s)


def sub_down(a, b):
    return add_down(a, np.negative(b))


def sub_up(a, b):
    return add_up(a, np.negative(b))


def _mul_directed(a, b, up: bool):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    p = a * b
    err = _prod_err(a, b, p)
    # Outside the error-free transform's range, round outward unconditionally
    # (exactness cannot be certified there). Products that are exactly zero
    # because one factor is zero stay exact.
    unsafe = (np.abs(a) > _SPLIT_LIMIT) | (np.abs(b) > _SPLIT_LIMIT)
    unsafe |= (np.abs(p) < _TINY) & (a != 0) & (b != 0)
    if up:
        bump = (err > 0) | (unsafe & np.isfinite(p))
        return np.where(bump, np.nextafter(p, np.inf), p)
    bump = (err < 0) | (unsafe & np.isfinite(p))
    return np.where(bump, np.nextafter(p, -np.inf), p)


def mul_down(a, b):
    """Largest-representable lower bound for a * b."""
    return _mul_directed(a, b, up=False)


def mul_up(a, b):
    """Smallest-representable upper bound for a * b."""
    return _mul_directed(a, b, up=True)


def interval_mul(lo1, hi1, lo2, hi2):
    """Product of intervals [lo1, hi1] * [lo2, hi2] with outward rounding.

    Takes the min/max over the four endpoint products, each rounded in its
    sound direction. Operands broadcast elementwise.
    """
    lo = np.minimum.reduce([
        mul_down(lo1, lo2), mul_down(lo1, hi2),
        mul_down(hi1, lo2), mul_down(hi1, hi2),
    ])
    hi = np.maximum.reduce([
        mul_up(lo1, lo2), mul_up(lo1, hi2),
        mul_up(hi1, lo2), mul_up(hi1, hi2),
    ])
    return lo, hi


def _pow_point_down(x, m: int):
    # Lower bound of x**m via repeated directed multiplication; sign-aware.
    lo = np.asarray(x, dtype=np.float64)
    hi = lo
    for _ in range(m - 1):
        lo, hi = interval_mul(lo, hi, np.asarray(x), np.asarray(x))
    return lo


def _pow_point_up(x, m: int):
    lo = np.asarray(x, dtype=np.float64)
    hi = lo
    for _ in range(m - 1):
        lo, hi = interval_mul(lo, hi, np.asarray(x), np.asarray(x))
    return hi


def interval_pow(lo, hi, m: int):
    """Enclosure of {x**m : x in [lo, hi]} for integer m >= 1.

    Uses the monotone/even-power case split of interval arithmetic: for even
    m on a sign-crossing interval the lower endpoint is exactly 0, never a
    negative product. This is the dependency-aware power rule, tighter than
    repeated interval self-multiplication.
    """
    if m < 1:
        raise ValueError(f"integer power must be >= 1, got {m}")
    lo = np.asarray(lo, dtype=np.float64)
    hi = np.asarray(hi, dtype=np.float64)
    if m == 1:
        return lo.copy(), hi.copy()
    lo_p_lo = _pow_point_down(lo, m)
    lo_p_hi = _pow_point_up(lo, m)
    hi_p_lo = _pow_point_down(hi, m)
    hi_p_hi = _pow_point_up(hi, m)
    if m % 2 == 1:
        return lo_p_lo, hi_p_hi
    # even power: monotone decreasing on the negative side
    out_lo = np.where(lo >= 0, lo_p_lo, np.where(hi <= 0, hi_p_lo, 0.0))
    out_hi = np.where(lo >= 0, hi_p_hi, np.where(hi <= 0, lo_p_hi,
                                                 np.maximum(lo_p_hi, hi_p_hi)))
    return out_lo, out_hi
