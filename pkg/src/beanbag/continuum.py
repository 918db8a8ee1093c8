"""Infinitely many box compositions: the uniform-prior Beta posterior.

With a uniform prior on the white fraction ``p`` the posterior after
``n_W`` white and ``n_B`` black draws is Beta(n_W + 1, n_B + 1), so a
:class:`~beanbag.evidence.Counts` fully determines it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import xlog1py, xlogy

from .evidence import Counts

FIGURE_COUNTS = tuple(Counts(k, k) for k in (1, 2, 5, 10, 25, 50))
DEFAULT_GRID_POINTS = 1001


def _log_norm(counts: Counts) -> float:
    # log of (n+1)! / (n_W! n_B!)
    return (
        math.lgamma(counts.total() + 2)
        - math.lgamma(counts.n_white + 1)
        - math.lgamma(counts.n_black + 1)
    )


@dataclass(frozen=True)
class BetaPosterior:
    counts: Counts = Counts()

    @property
    def alpha(self) -> int:
        return self.counts.n_white + 1

    @property
    def beta(self) -> int:
        return self.counts.n_black + 1

    def density(self, p):
        return density(self, p)

    def mean(self) -> Fraction:
        return mean(self.counts)

    def sd(self) -> float:
        return sd(self.counts)


def density(posterior: BetaPosterior | Counts, p):
    """Posterior density of the white fraction at ``p``.

    Accepts a scalar or an array of points in [0, 1].  Evaluated through
    log-gamma, with ``0 * log 0 = 0`` so that e.g. ``Counts(0, 0)`` is exactly
    the uniform density, endpoints included.
    """
    counts = posterior.counts if isinstance(posterior, BetaPosterior) else posterior
    arr = np.asarray(p, dtype=float)
    if np.any((arr < 0) | (arr > 1)) or np.any(np.isnan(arr)):
        raise ValueError("p must lie in [0, 1]")
    logf = _log_norm(counts) + xlogy(counts.n_white, arr) + xlog1py(counts.n_black, -arr)
    out = np.exp(logf)
    if out.ndim == 0:
        return float(out)
    return out


def density_factorial(counts: Counts, p: float) -> float:
    """Plain-factorial form of :func:`density`, for cross-checks with n <= 20."""
    if counts.total() > 20:
        raise ValueError("factorial path is limited to n <= 20")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    norm = math.factorial(counts.total() + 1) / (
        math.factorial(counts.n_white) * math.factorial(counts.n_black)
    )
    return norm * p**counts.n_white * (1 - p) ** counts.n_black


@dataclass(frozen=True)
class DensityCurve:
    counts: Counts
    p: np.ndarray
    density: np.ndarray

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.p.tolist(), self.density.tolist()))

    def argmax(self) -> float:
        return float(self.p[np.argmax(self.density)])


def curve(counts: Counts, grid_points: int = DEFAULT_GRID_POINTS) -> DensityCurve:
    """Density on a uniform grid over [0, 1], endpoints included."""
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2")
    grid = np.linspace(0.0, 1.0, grid_points)
    return DensityCurve(counts, grid, density(counts, grid))


def predictive_white(counts: Counts) -> Fraction:
    """Laplace's rule of succession: ``(n_W + 1) / (n + 2)``."""
    return Fraction(counts.n_white + 1, counts.total() + 2)


def predictive_black(counts: Counts) -> Fraction:
    return Fraction(counts.n_black + 1, counts.total() + 2)


def mean(counts: Counts) -> Fraction:
    """Posterior mean of ``p``; the same number as :func:`predictive_white`."""
    return Fraction(counts.n_white + 1, counts.total() + 2)


def sd(counts: Counts) -> float:
    """Posterior standard deviation ``sqrt(E[p](1 - E[p]) / (n + 3))``."""
    m = mean(counts)
    return math.sqrt(m * (1 - m) / (counts.total() + 3))


def frequency_spread(p: float, m: int) -> tuple[float, float]:
    """Mean and spread of the white frequency over ``m`` future draws at known ``p``."""
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    return p, math.sqrt(p * (1 - p) / m)
