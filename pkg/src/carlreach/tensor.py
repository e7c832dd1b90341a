"""Kronecker products and powers of vectors, matrices, and boxes.

Component ordering follows the recursive Kronecker definition: entry k of
x^(i) corresponds to the base-n digits of k (most significant first), i.e.
lexicographic order of the index tuple. That ordering fixes the column
layout of the quadratic coefficient matrix and of all transfer matrices.

The set-valued power groups repeated variables per component before
evaluating with interval arithmetic (x1*x2*x1 evaluates as x1^2 * x2), which
avoids the dependency problem and makes even powers of sign-crossing
intervals nonnegative.
"""

from __future__ import annotations

import os

import numpy as np

from .exceptions import BudgetExceededError
from .rounding import interval_mul, interval_pow
from .sets import Hyperrectangle

DEFAULT_COMPONENT_BUDGET = 10**7
_BUDGET_ENV = "CARLREACH_COMPONENT_BUDGET"


def component_budget(budget: int | None = None) -> int:
    """Resolve the component budget: explicit arg, else env var, else default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_COMPONENT_BUDGET


def check_budget(n: int, order: int, budget: int | None = None) -> int:
    """Return n**order, raising if it exceeds the component budget."""
    limit = component_budget(budget)
    size = n**order  # Python ints do not overflow
    if size > limit:
        raise BudgetExceededError(
            f"Kronecker power needs {size} components for n={n}, order={order}; "
            f"budget is {limit} (override via {_BUDGET_ENV})"
        )
    return size


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two vectors or matrices.

    Block (i, j) of the result equals a[i, j] * b; vectors are treated as
    n x 1 columns, so vector (x) vector yields a vector of length len(a)*len(b).
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim > 2 or b.ndim > 2:
        raise ValueError("kron operands must be vectors or matrices")
    return np.kron(a, b)


def kron_pow(x: np.ndarray, i: int, budget: int | None = None) -> np.ndarray:
    """i-fold Kronecker power of a vector; kron_pow(x, 1) == x."""
    if i < 1:
        raise ValueError(f"Kronecker power order must be >= 1, got {i}")
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    check_budget(x.shape[0], i, budget)
    out = x
    for _ in range(i - 1):
        out = np.kron(out, x)
    return out


def _digits(flat: int, n: int, order: int) -> tuple[int, ...]:
    # base-n digits of flat, most significant first, 0-based
    out = []
    for _ in range(order):
        out.append(flat % n)
        flat //= n
    return tuple(reversed(out))


def canonical_monomial(position: tuple[int, ...], n: int) -> np.ndarray:
    """Exponent vector of the monomial at a Kronecker-power position.

    ``position`` holds 1-based variable indices, one per factor; the result
    groups repeats, e.g. position (1, 1, 2, 1) with n=2 gives (3, 1). The
    exponents sum to the power order len(position).
    """
    pos = tuple(int(k) for k in position)
    if not pos:
        raise ValueError("position tuple must be nonempty")
    omega = np.zeros(n, dtype=np.int64)
    for k in pos:
        if not 1 <= k <= n:
            raise ValueError(f"position entry {k} outside [1, {n}]")
        omega[k - 1] += 1
    return omega


def box_kron_pow(box: Hyperrectangle, i: int,
                 budget: int | None = None) -> Hyperrectangle:
    """Interval enclosure of {x^(i) : x in box} as an n^i-dimensional box.

    Each component is the interval product of grouped variable powers,
    evaluated with the dependency-aware integer-power rule and outward
    rounding, so kron_pow(x, i) is contained for every x in the box.
    """
    if i < 1:
        raise ValueError(f"Kronecker power order must be >= 1, got {i}")
    n = box.dim
    size = check_budget(n, i, budget)
    if i == 1:
        return box
    lo_in, hi_in = box.low, box.high

    # one interval evaluation per distinct grouped monomial
    cache: dict[tuple[int, ...], tuple[float, float]] = {}

    def monomial_interval(counts: tuple[int, ...]) -> tuple[float, float]:
        got = cache.get(counts)
        if got is not None:
            return got
        lo, hi = 1.0, 1.0
        for k, m in enumerate(counts):
            if m == 0:
                continue
            p_lo, p_hi = interval_pow(lo_in[k], hi_in[k], m)
            lo, hi = interval_mul(lo, hi, p_lo, p_hi)
        result = (float(lo), float(hi))
        cache[counts] = result
        return result

    out_lo = np.empty(size)
    out_hi = np.empty(size)
    counts_buf = [0] * n
    for flat in range(size):
        for k in range(n):
            counts_buf[k] = 0
        for d in _digits(flat, n, i):
            counts_buf[d] += 1
        out_lo[flat], out_hi[flat] = monomial_interval(tuple(counts_buf))
    return Hyperrectangle(out_lo, out_hi)
