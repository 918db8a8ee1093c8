"""Odds, judgement leanings and the additive evidence ledger.

Odds are kept as exact integer ratios with the two extended values 0 and
+inf allowed, so that a hypothesis ruled out by a single observation is an
ordinary value rather than an exception.  Judgement leanings (JL) are base-10
logarithms of odds and are plain floats.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Union


class EvidenceError(ValueError):
    """Base class for evidence that cannot be turned into a finite update."""


class ContradictoryEvidenceError(EvidenceError):
    """Certain evidence for and certain evidence against the same hypothesis."""


class UndefinedEvidenceError(EvidenceError):
    """A Bayes factor of the form 0/0: both hypotheses forbid the observation."""


class ImpossibleEvidenceError(EvidenceError):
    """Every hypothesis in the space has been ruled out."""


class Color(enum.Enum):
    WHITE = "W"
    BLACK = "B"

    @property
    def complement(self) -> Color:
        return Color.BLACK if self is Color.WHITE else Color.WHITE

    @classmethod
    def parse(cls, text: str) -> Color:
        key = text.strip().upper()
        if key in ("W", "WHITE"):
            return cls.WHITE
        if key in ("B", "BLACK"):
            return cls.BLACK
        raise ValueError(f"not a color: {text!r}")

    def __str__(self) -> str:
        return self.name.capitalize()


@dataclass(frozen=True, order=True)
class Counts:
    """Tallies of white and black draws; the sufficient statistic."""

    n_white: int = 0
    n_black: int = 0

    def __post_init__(self):
        for name in ("n_white", "n_black"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {type(value).__name__}")
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    def total(self) -> int:
        return self.n_white + self.n_black

    def of(self, color: Color) -> int:
        return self.n_white if color is Color.WHITE else self.n_black

    def add(self, color: Color, k: int = 1) -> Counts:
        if color is Color.WHITE:
            return Counts(self.n_white + k, self.n_black)
        return Counts(self.n_white, self.n_black + k)

    @classmethod
    def from_sequence(cls, colors) -> Counts:
        n_white = n_black = 0
        for c in colors:
            if c is Color.WHITE:
                n_white += 1
            else:
                n_black += 1
        return cls(n_white, n_black)


@functools.total_ordering
@dataclass(frozen=True)
class Odds:
    """An exact ratio ``numerator : denominator`` in lowest terms.

    ``Odds(0, 1)`` is zero odds and ``Odds(1, 0)`` is infinite odds; ``0:0`` is
    rejected.  Multiplying zero by infinity raises
    :class:`UndefinedEvidenceError`.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("odds terms must be integers")
        if num < 0 or den < 0:
            raise ValueError("odds terms must be non-negative")
        if num == 0 and den == 0:
            raise UndefinedEvidenceError("odds 0:0 are undefined")
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def of(cls, value: Union[Odds, Rational, int, float]) -> Odds:
        """Coerce an exact number (or +inf) to odds."""
        if isinstance(value, Odds):
            return value
        if isinstance(value, float):
            if math.isinf(value) and value > 0:
                return cls.infinite()
            value = Fraction(value)
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @classmethod
    def even(cls) -> Odds:
        return cls(1, 1)

    @classmethod
    def infinite(cls) -> Odds:
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise OverflowError("infinite odds have no rational value")
        return Fraction(self.numerator, self.denominator)

    def __float__(self) -> float:
        if self.is_infinite:
            return math.inf
        return self.numerator / self.denominator

    def __mul__(self, other) -> Odds:
        if not isinstance(other, Odds):
            try:
                other = Odds.of(other)
            except (TypeError, ValueError):
                return NotImplemented
        if (self.is_zero and other.is_infinite) or (self.is_infinite and other.is_zero):
            raise UndefinedEvidenceError("0 x inf: evidence rules out both hypotheses")
        return Odds(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Odds:
        other = Odds.of(other)
        return self * Odds(other.denominator, other.numerator)

    def reciprocal(self) -> Odds:
        return Odds(self.denominator, self.numerator)

    def __lt__(self, other: Odds) -> bool:
        other = Odds.of(other)
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.denominator == 1:
            return f"{self.numerator}/1"
        return f"{self.numerator}/{self.denominator}"


def jl_from_odds(odds) -> float:
    """Judgement leaning: base-10 logarithm of the odds.

    Zero odds give ``-inf`` and infinite odds ``+inf``.  Uses the integer
    terms directly so huge numerators and denominators do not overflow.
    """
    odds = Odds.of(odds)
    if odds.is_zero:
        return -math.inf
    if odds.is_infinite:
        return math.inf
    return math.log10(odds.numerator) - math.log10(odds.denominator)


def prob_from_odds(odds) -> Fraction:
    """Probability ``num / (num + den)`` as an exact fraction."""
    odds = Odds.of(odds)
    if odds.is_infinite:
        return Fraction(1)
    return Fraction(odds.numerator, odds.numerator + odds.denominator)


def odds_from_prob(prob) -> Odds:
    """Inverse of :func:`prob_from_odds` for exact probabilities in [0, 1]."""
    prob = Fraction(prob)
    if not 0 <= prob <= 1:
        raise ValueError(f"probability must lie in [0, 1], got {prob}")
    return Odds(prob.numerator, prob.denominator - prob.numerator)


def delta_jl(bayes_factor) -> float:
    """Weight of evidence of a Bayes factor, in base-10 units."""
    if isinstance(bayes_factor, float):
        if bayes_factor < 0 or math.isnan(bayes_factor):
            raise ValueError(f"Bayes factor must be non-negative, got {bayes_factor}")
        if bayes_factor == 0:
            return -math.inf
        return math.log10(bayes_factor)
    return jl_from_odds(bayes_factor)


@dataclass(frozen=True)
class EvidenceEntry:
    label: str
    bayes_factor: Union[Odds, float]
    delta_jl: float

    @classmethod
    def from_factor(cls, label: str, bayes_factor) -> EvidenceEntry:
        if not isinstance(bayes_factor, (Odds, float)):
            bayes_factor = Odds.of(bayes_factor)
        return cls(label, bayes_factor, delta_jl(bayes_factor))


@dataclass(frozen=True)
class OddsLedger:
    """Running JL total with the ordered evidence that produced it."""

    initial_jl: float = 0.0
    entries: tuple[EvidenceEntry, ...] = ()
    current_jl: float = field(default=None)

    def __post_init__(self):
        if self.current_jl is None:
            total = self.initial_jl
            for entry in self.entries:
                total = _add_jl(total, entry.delta_jl)
            object.__setattr__(self, "current_jl", total)

    @classmethod
    def from_prior_odds(cls, odds) -> OddsLedger:
        return cls(initial_jl=jl_from_odds(odds))

    def append(self, entry: EvidenceEntry) -> OddsLedger:
        return ledger_append(self, entry)

    def __len__(self) -> int:
        return len(self.entries)


def _add_jl(total: float, step: float) -> float:
    if math.isinf(total) and math.isinf(step) and total != step:
        raise ContradictoryEvidenceError(
            "ledger already holds certain evidence in the opposite direction"
        )
    return total + step


def ledger_append(ledger: OddsLedger, entry: EvidenceEntry) -> OddsLedger:
    """Return a new ledger with ``entry`` appended and the JL total updated."""
    return OddsLedger(
        initial_jl=ledger.initial_jl,
        entries=ledger.entries + (entry,),
        current_jl=_add_jl(ledger.current_jl, entry.delta_jl),
    )
