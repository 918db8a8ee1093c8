"""Odds on the color of the next bean, and how each draw moves them.

Under a uniform prior on the white fraction the white:black predictive odds
after ``n_W`` white and ``n_B`` black draws are ``(n_W + 1) / (n_B + 1)``.
A new white multiplies them by ``(n_W + 2) / (n_W + 1)`` and a new black by
``(n_B + 1) / (n_B + 2)``.  These factors shrink towards 1 as more beans of
the same color are seen, so the weight of an argument depends on when it
arrives.  That is why an excess of twenty black beans does not always give
the same belief.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .continuum import predictive_black, predictive_white
from .evidence import (
    Color,
    Counts,
    EvidenceEntry,
    Odds,
    OddsLedger,
    delta_jl,
    jl_from_odds,
)


@dataclass(frozen=True)
class PredictiveState:
    counts: Counts = Counts()
    odds_white_black: Odds = Odds(1, 1)
    ledger: OddsLedger = field(default_factory=OddsLedger)

    @property
    def jl(self) -> float:
        return self.ledger.current_jl

    @property
    def p_white(self) -> Fraction:
        return predictive_white(self.counts)

    @property
    def p_black(self) -> Fraction:
        return predictive_black(self.counts)


@dataclass(frozen=True)
class Step:
    """One row of a replay trace; ``counts`` are the tallies after the draw."""

    index: int
    color: Color
    factor: Fraction
    delta_jl: float
    odds: Odds
    jl: float
    counts: Counts

    @property
    def p_white(self) -> Fraction:
        return predictive_white(self.counts)

    @property
    def p_black(self) -> Fraction:
        return predictive_black(self.counts)


def initial_state() -> PredictiveState:
    """No draws yet: even odds, empty ledger."""
    return PredictiveState()


def update_factor(color: Color, counts: Counts) -> Fraction:
    """Factor by which one more ``color`` changes the white:black odds."""
    if color is Color.WHITE:
        return Fraction(counts.n_white + 2, counts.n_white + 1)
    return Fraction(counts.n_black + 1, counts.n_black + 2)


def _label(index: int, color: Color) -> str:
    return f"draw {index}: {color}"


def apply_observation(state: PredictiveState, color: Color) -> PredictiveState:
    factor = update_factor(color, state.counts)
    counts = state.counts.add(color)
    entry = EvidenceEntry.from_factor(_label(counts.total(), color), Odds.of(factor))
    return PredictiveState(
        counts=counts,
        odds_white_black=state.odds_white_black * factor,
        ledger=state.ledger.append(entry),
    )


@dataclass(frozen=True)
class Replay:
    state: PredictiveState
    steps: Optional[tuple[Step, ...]]


def replay(sequence: Iterable[Color], trace: bool = True) -> Replay:
    """Fold :func:`apply_observation` over ``sequence``.

    With ``trace=True`` every step is recorded and the ledger keeps one entry
    per draw.  With ``trace=False`` only the final state is kept, its ledger
    holding a single entry for the overall (telescoped) factor; odds and
    counts are the same exact values either way.
    """
    if not trace:
        counts = Counts.from_sequence(sequence)
        return Replay(state_from_counts(counts), None)

    counts = Counts()
    odds = Odds(1, 1)
    jl = 0.0
    entries = []
    steps = []
    for index, color in enumerate(sequence, start=1):
        factor = update_factor(color, counts)
        counts = counts.add(color)
        odds = odds * factor
        dj = delta_jl(Odds.of(factor))
        jl += dj
        entries.append(EvidenceEntry(_label(index, color), Odds.of(factor), dj))
        steps.append(Step(index, color, factor, dj, odds, jl, counts))
    ledger = OddsLedger(initial_jl=0.0, entries=tuple(entries), current_jl=jl)
    return Replay(PredictiveState(counts, odds, ledger), tuple(steps))


def state_from_counts(counts: Counts) -> PredictiveState:
    """Final state for ``counts`` without walking the draws one by one."""
    factor = telescoped_factor(counts)
    ledger = OddsLedger()
    if counts.total():
        ledger = ledger.append(
            EvidenceEntry.from_factor(
                f"{counts.n_white} white, {counts.n_black} black", Odds.of(factor)
            )
        )
    return PredictiveState(counts, Odds.of(factor), ledger)


def telescoped_factor(counts: Counts) -> Fraction:
    """Overall factor from even odds: ``(n_W + 1) / (n_B + 1)``.

    The white factors multiply to ``n_W + 1`` and the black ones to
    ``1 / (n_B + 1)``, whatever the order of the draws.
    """
    return Fraction(counts.n_white + 1, counts.n_black + 1)


def predictive_odds(counts: Counts) -> Odds:
    return Odds(counts.n_white + 1, counts.n_black + 1)


def residual_jl(counts: Counts) -> float:
    """Combined weight of evidence of ``counts`` for white over black."""
    return jl_from_odds(predictive_odds(counts))
