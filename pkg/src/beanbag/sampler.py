"""Seeded draws from a bag with a known white fraction.

The generator is SplitMix64 (Steele, Lea & Flood 2014; Vigna's reference C
code).  With 64-bit wrapping arithmetic::

    state  += 0x9E3779B97F4A7C15
    z       = state
    z       = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z       = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output  = z ^ (z >> 31)

The state starts at the seed, and the i-th output (i = 1, 2, ...) depends only
on ``seed + i * 0x9E3779B97F4A7C15``, which lets whole blocks be generated
with numpy.  Draw ``i`` is white iff ``output_i / 2**64 < true_p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import continuum
from .evidence import Color, Counts, Odds, jl_from_odds
from .predictive_odds import Step, predictive_odds, replay

ALGORITHM = "splitmix64"
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1

_BLOCK = 1 << 20


class SplitMix64:
    """Scalar reference generator; :func:`uniform64_block` is the fast path."""

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)


def uniform64_block(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start + 1 .. start + count`` of SplitMix64 seeded with ``seed``."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed) + idx * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX2)
    return z ^ (z >> np.uint64(31))


@dataclass(frozen=True)
class RngSpec:
    seed: int
    algorithm: str = ALGORITHM

    def __post_init__(self):
        if self.algorithm != ALGORITHM:
            raise ValueError(f"unsupported generator {self.algorithm!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise TypeError("seed must be an int")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _white_threshold(true_p: float) -> int:
    # u / 2**64 < p  <=>  u < ceil(p * 2**64); the float product is exact.
    if not 0 <= true_p <= 1:
        raise ValueError(f"true_p must lie in [0, 1], got {true_p}")
    return math.ceil(Fraction(true_p) * (1 << 64))


def _white_mask(true_p: float, seed: int, start: int, count: int) -> np.ndarray:
    threshold = _white_threshold(true_p)
    if threshold == 0:
        return np.zeros(count, dtype=bool)
    if threshold > MASK64:
        return np.ones(count, dtype=bool)
    return uniform64_block(seed, start, count) < np.uint64(threshold)


def draw_sequence(true_p: float, n: int, rng: RngSpec) -> list[Color]:
    """``n`` draws with replacement from a bag whose white fraction is ``true_p``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    mask = _white_mask(true_p, rng.seed, 0, n)
    return [Color.WHITE if w else Color.BLACK for w in mask.tolist()]


def count_whites(true_p: float, n: int, rng: RngSpec) -> Counts:
    """Tallies of :func:`draw_sequence` without holding the draws in memory."""
    if n < 0:
        raise ValueError("n must be non-negative")
    n_white = 0
    for start in range(0, n, _BLOCK):
        n_white += int(_white_mask(true_p, rng.seed, start, min(_BLOCK, n - start)).sum())
    return Counts(n_white, n - n_white)


@dataclass(frozen=True)
class Summary:
    counts: Counts
    odds: Odds
    jl: float
    p_white: Fraction
    p_black: Fraction
    beta_mean: Fraction
    beta_sd: float


@dataclass(frozen=True)
class SimulationTrace:
    true_p: float
    rng: RngSpec
    draws: Optional[tuple[Color, ...]]
    steps: Optional[tuple[Step, ...]]
    summary: Summary


def summarize(counts: Counts) -> Summary:
    odds = predictive_odds(counts)
    return Summary(
        counts=counts,
        odds=odds,
        jl=jl_from_odds(odds),
        p_white=continuum.predictive_white(counts),
        p_black=continuum.predictive_black(counts),
        beta_mean=continuum.mean(counts),
        beta_sd=continuum.sd(counts),
    )


def run_experiment(true_p: float, n: int, rng: RngSpec, trace: bool = True) -> SimulationTrace:
    """Draw ``n`` beans and follow the predictive odds.

    With ``trace=False`` the draws are only counted, in blocks, so ``n`` is
    limited by time rather than memory.
    """
    if not trace:
        counts = count_whites(true_p, n, rng)
        return SimulationTrace(true_p, rng, None, None, summarize(counts))
    draws = tuple(draw_sequence(true_p, n, rng))
    result = replay(draws, trace=True)
    return SimulationTrace(true_p, rng, draws, result.steps, summarize(result.state.counts))
