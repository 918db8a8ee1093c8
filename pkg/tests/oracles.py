"""Independent reference computations used to check the library.

None of these call into the code paths they verify.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np

SIMPSON_NODES = 2**17 + 1


def simpson(values: np.ndarray, a: float = 0.0, b: float = 1.0) -> float:
    """Composite Simpson rule on an odd number of equally spaced samples."""
    n = values.size - 1
    if n % 2:
        raise ValueError("Simpson's rule needs an even number of intervals")
    h = (b - a) / n
    return h / 3 * (values[0] + values[-1] + 4 * values[1:-1:2].sum() + 2 * values[2:-1:2].sum())


def simpson_grid() -> np.ndarray:
    return np.linspace(0.0, 1.0, SIMPSON_NODES)


def unnormalized_beta(n_white: int, n_black: int, p: np.ndarray) -> np.ndarray:
    """p**n_W (1-p)**n_B scaled by its maximum on the grid (log space)."""
    with np.errstate(divide="ignore"):
        logf = np.zeros_like(p)
        if n_white:
            logf += n_white * np.log(p)
        if n_black:
            logf += n_black * np.log1p(-p)
    return np.exp(logf - logf.max())


def beta_moments(n_white: int, n_black: int) -> tuple[float, float]:
    """Posterior mean and sd of p by quadrature of the unnormalized integrand."""
    p = simpson_grid()
    f = unnormalized_beta(n_white, n_black, p)
    z = simpson(f)
    m = simpson(p * f) / z
    var = simpson((p - m) ** 2 * f) / z
    return m, math.sqrt(var)


def binomial_frequency_sd(p: float, m: int) -> float:
    """sd of k/m for k ~ Binomial(m, p), enumerating all m+1 outcomes."""
    ks = range(m + 1)
    probs = [math.comb(m, k) * p**k * (1 - p) ** (m - k) for k in ks]
    mean = sum(k / m * w for k, w in zip(ks, probs))
    return math.sqrt(sum((k / m - mean) ** 2 * w for k, w in zip(ks, probs)))


def brute_combined_odds(n_white: int, n_black: int, p1, p2):
    """Product of per-draw likelihood ratios, one factor per draw."""
    out = Fraction(1)
    p1, p2 = Fraction(p1), Fraction(p2)
    for _ in range(n_white):
        out *= p1 / p2
    for _ in range(n_black):
        out *= (1 - p1) / (1 - p2)
    return out


def brute_predictive_factors(sequence) -> list[Fraction]:
    """Per-step white:black odds ratios from Laplace odds recomputed from scratch."""
    factors = []
    w = b = 0
    for c in sequence:
        before = Fraction(w + 1, b + 1)
        if c == "W":
            w += 1
        else:
            b += 1
        factors.append(Fraction(w + 1, b + 1) / before)
    return factors
