"""Inference over a finite set of candidate box compositions.

Each hypothesis is a box whose fraction of white balls ``p`` is known.  Draws
are with replacement, so given a box the colors are independent and the
whole history enters only through :class:`~beanbag.evidence.Counts`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .evidence import (
    Color,
    Counts,
    ImpossibleEvidenceError,
    UndefinedEvidenceError,
)

# Above this many draws of either color, products move to log10 space.
LOG_SPACE_THRESHOLD = 50


def _check_proportion(p, name: str = "p") -> None:
    if not 0 <= p <= 1:
        raise ValueError(f"{name} must lie in [0, 1], got {p}")


def likelihood(color: Color, p):
    """Probability of drawing ``color`` from a box with white fraction ``p``."""
    _check_proportion(p)
    return p if color is Color.WHITE else 1 - p


def single_bayes_factor(color: Color, p1, p2):
    """Bayes factor of box 1 against box 2 from a single draw of ``color``.

    Returns ``math.inf`` when only box 2 forbids the color, and 0 when only
    box 1 does.  Exact inputs (ints, Fractions) give an exact result.
    """
    num = likelihood(color, p1)
    den = likelihood(color, p2)
    if den == 0:
        if num == 0:
            raise UndefinedEvidenceError(
                f"{color} is impossible under both p1={p1} and p2={p2}"
            )
        return math.inf
    if isinstance(num, float) or isinstance(den, float):
        return num / den
    return Fraction(num) / Fraction(den)


def single_delta_jl(color: Color, p1, p2) -> float:
    """Weight of evidence (base 10) of one draw of ``color`` for box 1."""
    factor = single_bayes_factor(color, p1, p2)
    if factor == 0:
        return -math.inf
    if math.isinf(factor):
        return math.inf
    if isinstance(factor, Fraction):
        return math.log10(factor.numerator) - math.log10(factor.denominator)
    return math.log10(factor)


def combined_odds(counts: Counts, p1, p2):
    """Odds of box 1 against box 2 after ``counts``, starting from even odds.

    Small tallies multiply the per-color factors directly (exactly, for exact
    inputs); larger ones add weights of evidence and exponentiate, which keeps
    e.g. 0.25**990 from underflowing.
    """
    _check_proportion(p1, "p1")
    _check_proportion(p2, "p2")
    if max(counts.n_white, counts.n_black) > LOG_SPACE_THRESHOLD:
        return _exp10(combined_delta_jl(counts, p1, p2))
    try:
        return _direct_product(counts, p1, p2)
    except OverflowError:
        return _exp10(combined_delta_jl(counts, p1, p2))


def _exp10(jl: float) -> float:
    try:
        return 10.0**jl
    except OverflowError:
        return math.inf


def _direct_product(counts: Counts, p1, p2):
    result = 1
    saw_zero = saw_inf = False
    for color in Color:
        k = counts.of(color)
        if k == 0:
            continue
        factor = single_bayes_factor(color, p1, p2)
        if factor == 0:
            saw_zero = True
        elif math.isinf(factor):
            saw_inf = True
        else:
            result = result * factor**k
    if saw_zero and saw_inf:
        raise UndefinedEvidenceError(f"{counts} is impossible under both boxes")
    if saw_inf:
        return math.inf
    if saw_zero:
        return 0.0
    return result


def combined_delta_jl(counts: Counts, p1, p2) -> float:
    """``n_W * dJL(White) + n_B * dJL(Black)``, with colors never drawn skipped."""
    total = 0.0
    for color in Color:
        k = counts.of(color)
        if k:
            total += k * single_delta_jl(color, p1, p2)
    if math.isnan(total):
        raise UndefinedEvidenceError(f"{counts} is impossible under both boxes")
    return total


@dataclass(frozen=True, eq=False)
class DiscreteHypothesisSpace:
    """Candidate white fractions with their (normalized) prior weights."""

    proportions: np.ndarray
    prior_weights: np.ndarray

    def __init__(self, proportions, prior_weights=None):
        props = np.asarray(proportions, dtype=float)
        if props.ndim != 1 or props.size < 2:
            raise ValueError("need at least two hypotheses")
        if np.any((props < 0) | (props > 1)) or np.any(np.isnan(props)):
            raise ValueError("proportions must lie in [0, 1]")
        if np.unique(props).size != props.size:
            raise ValueError("proportions must be pairwise distinct")
        if prior_weights is None:
            weights = np.full(props.size, 1.0 / props.size)
        else:
            weights = np.asarray(prior_weights, dtype=float)
            if weights.shape != props.shape:
                raise ValueError("prior_weights must match proportions in length")
            if np.any(weights < 0) or not np.all(np.isfinite(weights)):
                raise ValueError("prior weights must be finite and non-negative")
            total = math.fsum(weights)
            if total <= 0:
                raise ValueError("prior weights must not all be zero")
            weights = weights / total
        props.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "proportions", props)
        object.__setattr__(self, "prior_weights", weights)

    @classmethod
    def two_boxes(cls, p1: float, p2: float) -> DiscreteHypothesisSpace:
        return cls([p1, p2])

    @classmethod
    def midpoint_grid(cls, k: int) -> DiscreteHypothesisSpace:
        """``k`` equally likely boxes at ``(i + 0.5) / k``."""
        return cls((np.arange(k) + 0.5) / k)

    def __len__(self) -> int:
        return self.proportions.size


@dataclass(frozen=True, eq=False)
class DiscretePosterior:
    space: DiscreteHypothesisSpace
    weights: np.ndarray

    def odds(self, i: int = 0, j: int = 1) -> float:
        """Posterior odds of hypothesis ``i`` against ``j``."""
        wi, wj = self.weights[i], self.weights[j]
        if wj == 0:
            return math.inf if wi > 0 else math.nan
        return float(wi / wj)

    def ruled_out(self) -> np.ndarray:
        return self.weights == 0


def _log_likelihoods(counts: Counts, props: np.ndarray) -> np.ndarray:
    # 0 * log(0) is taken as 0: a color never drawn says nothing.
    with np.errstate(divide="ignore"):
        out = np.zeros_like(props)
        if counts.n_white:
            out += counts.n_white * np.log(props)
        if counts.n_black:
            out += counts.n_black * np.log1p(-props)
    return out


def posterior(counts: Counts, space: DiscreteHypothesisSpace) -> DiscretePosterior:
    """Posterior weights ``prior_i * p_i**n_W * (1 - p_i)**n_B``, normalized."""
    if max(counts.n_white, counts.n_black) > LOG_SPACE_THRESHOLD:
        return posterior_log_space(counts, space)
    props = space.proportions
    raw = space.prior_weights * props**counts.n_white * (1.0 - props) ** counts.n_black
    if not np.isfinite(raw).all() or raw.sum() < np.finfo(float).tiny:
        return posterior_log_space(counts, space)
    return _normalized(counts, space, raw)


def posterior_log_space(counts: Counts, space: DiscreteHypothesisSpace) -> DiscretePosterior:
    """Same as :func:`posterior`, accumulated as log weights."""
    with np.errstate(divide="ignore"):
        logw = np.log(space.prior_weights) + _log_likelihoods(counts, space.proportions)
    top = logw.max()
    if not np.isfinite(top):
        raise ImpossibleEvidenceError(f"{counts} rules out every hypothesis")
    return _normalized(counts, space, np.exp(logw - top))


def _normalized(counts, space, raw) -> DiscretePosterior:
    total = raw.sum()
    if total <= 0:
        raise ImpossibleEvidenceError(f"{counts} rules out every hypothesis")
    weights = raw / total
    weights.setflags(write=False)
    return DiscretePosterior(space, weights)


def predictive(counts: Counts, space: DiscreteHypothesisSpace) -> float:
    """Probability that the next draw is white: posterior-weighted mean of ``p``."""
    post = posterior(counts, space)
    return float(np.dot(space.proportions, post.weights))
