"""Angle arithmetic, sample containers, evaluation grids, and estimate results.

Angles are plain floats (or numpy arrays) in radians, normalized to the
half-open interval [-pi, pi).  Densities are per radian, so the circular
uniform density is 1/(2*pi) everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi

# Admissible upper bound for any concentration-type parameter (rho or the
# disk radius r).  Values above this would push the kernel denominator
# (1-r)^2 below 1e-16 and the peak density above ~3e7/N per radian.
MAX_CONCENTRATION = 1.0 - 1e-8


class DomainError(ValueError):
    """A numeric argument is outside its documented domain."""


def normalize_angle(x):
    """Wrap angle(s) in radians onto [-pi, pi).

    Values already inside [-pi, pi) are returned unchanged (bit-exact), so
    normalization is idempotent.  Wrapping shifts the input by an integer
    multiple of 2*pi.

    Parameters
    ----------
    x : float or array_like
        Angle(s) in radians; must be finite.

    Returns
    -------
    float or np.ndarray
        Same shape as the input, every value in [-pi, pi).
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("angles must be finite")
    wrapped = np.mod(arr + np.pi, TWO_PI) - np.pi
    # np.mod can round up to exactly 2*pi for inputs a hair below a period
    # boundary, which would leave +pi in the output; fold it back.
    wrapped = np.where(wrapped >= np.pi, -np.pi, wrapped)
    out = np.where((arr >= -np.pi) & (arr < np.pi), arr, wrapped)
    if np.ndim(x) == 0:
        return float(out)
    return out


def circular_distance(a, b):
    """Shortest arc length between two angles, in [0, pi].

    Symmetric, and zero iff the two angles coincide on the circle.
    """
    d = np.abs(normalize_angle(np.asarray(a, dtype=float)) - normalize_angle(np.asarray(b, dtype=float)))
    out = np.minimum(d, TWO_PI - d)
    if np.ndim(a) == 0 and np.ndim(b) == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class AngleSample:
    """Observed angles theta_1..theta_N, normalized to [-pi, pi).

    The underlying array is copied and marked read-only.
    """

    angles: np.ndarray

    def __post_init__(self):
        arr = np.atleast_1d(np.asarray(self.angles, dtype=float))
        if arr.ndim != 1 or arr.size < 1:
            raise DomainError("a sample needs at least one angle")
        arr = np.array(normalize_angle(arr), dtype=float)
        arr.flags.writeable = False
        object.__setattr__(self, "angles", arr)

    @property
    def n(self) -> int:
        return int(self.angles.size)

    def rotated(self, alpha: float) -> "AngleSample":
        """New sample with every angle shifted by ``alpha`` (then wrapped)."""
        return AngleSample(self.angles + alpha)


@dataclass(frozen=True)
class EvalGrid:
    """Strictly increasing evaluation points inside [-pi, pi)."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.atleast_1d(np.asarray(self.points, dtype=float))
        if pts.ndim != 1 or pts.size < 2:
            raise DomainError("a grid needs at least two points")
        if not np.all(np.isfinite(pts)):
            raise DomainError("grid points must be finite")
        if np.any(pts < -np.pi) or np.any(pts >= np.pi):
            raise DomainError("grid points must lie in [-pi, pi)")
        if np.any(np.diff(pts) <= 0):
            raise DomainError("grid points must be strictly increasing")
        pts = pts.copy()
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def m(self) -> int:
        return int(self.points.size)

    @property
    def is_uniform(self) -> bool:
        diffs = np.diff(self.points)
        spacing = TWO_PI / self.m
        return bool(
            np.allclose(diffs, spacing, rtol=0.0, atol=1e-12)
            and abs(self.points[0] + np.pi) < 1e-12
        )

    @property
    def spacing(self) -> float:
        """Node spacing of a uniform grid."""
        if not self.is_uniform:
            raise DomainError("spacing is only defined for uniform grids")
        return TWO_PI / self.m

    def quadrature(self, values: np.ndarray) -> float:
        """Trapezoidal integral of grid values over one full period.

        The rule closes the circle: the segment from the last point back to
        the first (shifted by 2*pi) is included, so a periodic function
        sampled on a uniform grid integrates as mean(values) * 2*pi.
        """
        v = np.asarray(values, dtype=float)
        if v.shape != self.points.shape:
            raise DomainError("values must match the grid size")
        seg = np.diff(self.points)
        wrap_seg = self.points[0] + TWO_PI - self.points[-1]
        inner = 0.5 * np.sum((v[:-1] + v[1:]) * seg)
        return float(inner + 0.5 * (v[-1] + v[0]) * wrap_seg)


def uniform_grid(m: int) -> EvalGrid:
    """Uniform grid of ``m`` points starting at -pi with spacing 2*pi/m."""
    if not isinstance(m, (int, np.integer)) or m < 2:
        raise DomainError("grid size must be an integer >= 2")
    return EvalGrid(-np.pi + TWO_PI * np.arange(int(m)) / int(m))


@dataclass
class EstimateMeta:
    """Provenance of a density estimate: which estimator, with what knobs."""

    estimator: str
    n_obs: int
    params: dict = field(default_factory=dict)
    has_negative: bool = False


@dataclass(frozen=True)
class DensityEstimate:
    """Density values (per radian) on an evaluation grid."""

    grid: EvalGrid
    values: np.ndarray
    meta: EstimateMeta

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != self.grid.points.shape:
            raise DomainError("values must match the grid size")
        if not np.all(np.isfinite(v)):
            raise DomainError("density values must be finite")
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def integral(self) -> float:
        """Quadrature of the values over one period (should be close to 1)."""
        return self.grid.quadrature(self.values)
