"""Hyperrectangles, support functions, set norms, bloating, projection.

Boxes are the only first-class set type: initial conditions, reach sets and
error-enlarged outputs are all axis-aligned. Bounds (``low``/``high``) are
the authoritative representation; ``center``/``radius`` are derived views.
Constructing from center and radius rounds the bounds outward when the
conversion is inexact, so the represented set never shrinks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rounding import add_up, sub_down


class Hyperrectangle:
    """Axis-aligned box {x : low <= x <= high} in R^n."""

    __slots__ = ("low", "high")

    def __init__(self, low, high):
        low = np.atleast_1d(np.asarray(low, dtype=np.float64))
        high = np.atleast_1d(np.asarray(high, dtype=np.float64))
        if low.ndim != 1 or low.shape != high.shape:
            raise ValueError("low and high must be 1-d arrays of equal length")
        if not (np.isfinite(low).all() and np.isfinite(high).all()):
            raise ValueError("box bounds must be finite")
        if np.any(high < low):
            raise ValueError("high must dominate low componentwise")
        self.low = low
        self.high = high
        self.low.flags.writeable = False
        self.high.flags.writeable = False

    @classmethod
    def from_center_radius(cls, center, radius) -> "Hyperrectangle":
        """Build from a center and nonnegative radius vector.

        A scalar radius is broadcast. Inexact endpoint conversions are
        rounded outward so the result contains the intended set.
        """
        center = np.atleast_1d(np.asarray(center, dtype=np.float64))
        radius = np.broadcast_to(
            np.asarray(radius, dtype=np.float64), center.shape
        ).copy()
        if np.any(radius < 0):
            raise ValueError("radius components must be >= 0")
        return cls(sub_down(center, radius), add_up(center, radius))

    @property
    def dim(self) -> int:
        return self.low.shape[0]

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (self.low + self.high)

    @property
    def radius(self) -> np.ndarray:
        return 0.5 * (self.high - self.low)

    def is_point(self) -> bool:
        return bool(np.all(self.low == self.high))

    def contains(self, x, slack: float = 0.0) -> bool:
        x = np.asarray(x, dtype=np.float64)
        return bool(np.all(x >= self.low - slack) and np.all(x <= self.high + slack))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Uniform samples from the box, shape (size, dim)."""
        u = rng.random((size, self.dim))
        return self.low + u * (self.high - self.low)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hyperrectangle):
            return NotImplemented
        return np.array_equal(self.low, other.low) and np.array_equal(
            self.high, other.high
        )

    def __hash__(self):
        return hash((self.low.tobytes(), self.high.tobytes()))

    def __repr__(self) -> str:
        return f"Hyperrectangle(low={self.low!r}, high={self.high!r})"


@dataclass(frozen=True)
class Direction:
    """A nonzero direction vector with an optional display label."""

    vector: np.ndarray
    label: str | None = None

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.vector, dtype=np.float64))
        if not np.any(v != 0):
            raise ValueError("direction vector must be nonzero")
        v.flags.writeable = False
        object.__setattr__(self, "vector", v)


def ball_inf(dim: int, radius: float) -> Hyperrectangle:
    """Infinity-norm ball of the given radius centered at the origin."""
    return Hyperrectangle.from_center_radius(np.zeros(dim), float(radius))


def support(d, box: Hyperrectangle) -> float:
    """Support function of a box: max of <d, x> over x in the box.

    Exact for boxes; the maximizing vertex picks ``high`` where d > 0 and
    ``low`` where d < 0.
    """
    v = d.vector if isinstance(d, Direction) else np.asarray(d, dtype=np.float64)
    if v.shape != (box.dim,):
        raise ValueError(f"direction has dim {v.shape}, box has dim {box.dim}")
    return float(np.dot(np.maximum(v, 0.0), box.high)
                 + np.dot(np.minimum(v, 0.0), box.low))


def set_norm(box: Hyperrectangle, p) -> float:
    """Maximum of ||x||_p over the box, for p in {2, inf}.

    Attained at the vertex c + D r with D_ii = +1 where the center is
    nonnegative and -1 otherwise.
    """
    if p not in (2, np.inf):
        raise ValueError(f"norm order must be 2 or inf, got {p!r}")
    vertex = np.where(box.center >= 0, box.high, box.low)
    return float(np.linalg.norm(vertex, p))


def bloat(box: Hyperrectangle, eps: float) -> Hyperrectangle:
    """Minkowski sum with the eps-radius infinity-norm ball.

    Rounds outward on inexact endpoint arithmetic; eps = 0 is the identity.
    """
    eps = float(eps)
    if eps < 0:
        raise ValueError(f"bloating radius must be >= 0, got {eps}")
    if eps == 0.0:
        return box
    return Hyperrectangle(sub_down(box.low, eps), add_up(box.high, eps))


def project(box: Hyperrectangle, k: int) -> Hyperrectangle:
    """Restrict the box to its first k dimensions."""
    if not 1 <= k <= box.dim:
        raise ValueError(f"projection dim {k} outside [1, {box.dim}]")
    return Hyperrectangle(box.low[:k], box.high[:k])
