import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from beanbag.evidence import (
    Color,
    ContradictoryEvidenceError,
    Counts,
    EvidenceEntry,
    Odds,
    OddsLedger,
    UndefinedEvidenceError,
    jl_from_odds,
    ledger_append,
    odds_from_prob,
    prob_from_odds,
)

finite_odds = st.builds(
    Odds, st.integers(min_value=1, max_value=10**12), st.integers(min_value=1, max_value=10**12)
)


def test_color_complement():
    assert Color.WHITE.complement is Color.BLACK
    assert Color.BLACK.complement is Color.WHITE
    assert len(Color) == 2
    assert Color.parse("w") is Color.WHITE
    assert Color.parse("Black") is Color.BLACK


def test_counts():
    c = Counts(3, 4)
    assert c.total() == 7
    assert c.add(Color.WHITE) == Counts(4, 4)
    assert Counts.from_sequence([Color.BLACK, Color.WHITE, Color.BLACK]) == Counts(1, 2)
    with pytest.raises(ValueError):
        Counts(-1, 0)
    with pytest.raises(TypeError):
        Counts(1.0, 0)


def test_odds_are_reduced():
    assert Odds(2, 42) == Odds(1, 21)
    assert Odds(2, 42).numerator == 1
    assert Odds(5, 0) == Odds.infinite()
    assert Odds(0, 7) == Odds(0, 1)
    with pytest.raises(UndefinedEvidenceError):
        Odds(0, 0)


def test_odds_arithmetic_and_extended_values():
    assert Odds(1, 2) * Fraction(2, 3) == Odds(1, 3)
    assert Odds(2, 3) / Odds(2, 3) == Odds.even()
    assert Odds(0, 1) * Odds(5, 1) == Odds(0, 1)
    assert Odds.infinite() * Odds(1, 9) == Odds.infinite()
    with pytest.raises(UndefinedEvidenceError):
        Odds(0, 1) * Odds.infinite()
    assert Odds(1, 21) < Odds(991, 1011) < Odds.infinite()
    assert str(Odds(991, 1011)) == "991/1011"


@pytest.mark.parametrize(
    "odds, expected",
    [(Odds(1, 1), 0.0), (Odds(1, 21), -1.322), (Odds(2, 21), -1.021)],
)
def test_jl_from_odds(odds, expected):
    assert jl_from_odds(odds) == pytest.approx(expected, abs=5e-4)


def test_jl_extended():
    assert jl_from_odds(Odds(0, 1)) == -math.inf
    assert jl_from_odds(Odds.infinite()) == math.inf
    # huge terms go through integer logs rather than float conversion
    assert jl_from_odds(Odds(10**400, 1)) == pytest.approx(400)


@pytest.mark.parametrize(
    "odds, prob",
    [(Odds(1, 21), Fraction(1, 22)), (Odds(1, 1), Fraction(1, 2)), (Odds(2, 21), Fraction(2, 23))],
)
def test_prob_from_odds(odds, prob):
    assert prob_from_odds(odds) == prob


def test_prob_from_odds_decimals():
    assert float(prob_from_odds(Odds(1, 21))) == pytest.approx(0.04545, abs=5e-6)
    assert float(prob_from_odds(Odds(2, 21))) == pytest.approx(0.08696, abs=5e-6)
    assert prob_from_odds(Odds(0, 1)) == 0
    assert prob_from_odds(Odds.infinite()) == 1


def test_ledger_append_examples():
    first = ledger_append(OddsLedger(), EvidenceEntry.from_factor("draw 1: Black", Fraction(1, 2)))
    assert first.current_jl == pytest.approx(-0.301, abs=5e-4)
    at = OddsLedger(initial_jl=jl_from_odds(Odds(1, 21)))
    moved = ledger_append(at, EvidenceEntry.from_factor("draw 21: White", Fraction(2)))
    assert moved.current_jl == pytest.approx(-1.021, abs=5e-4)
    same = ledger_append(at, EvidenceEntry.from_factor("nothing", Fraction(1)))
    assert same.current_jl == at.current_jl
    assert len(moved) == 1 and len(at) == 0


def test_ledger_is_immutable():
    ledger = OddsLedger()
    ledger.append(EvidenceEntry.from_factor("x", 3))
    assert ledger.entries == ()


def test_ledger_infinite_and_contradiction():
    ledger = OddsLedger().append(EvidenceEntry.from_factor("ruled in", Odds.infinite()))
    assert ledger.current_jl == math.inf
    ledger = ledger.append(EvidenceEntry.from_factor("small", Fraction(1, 1000)))
    assert ledger.current_jl == math.inf
    with pytest.raises(ContradictoryEvidenceError):
        ledger.append(EvidenceEntry.from_factor("ruled out", Odds(0, 1)))


def test_entry_invariant():
    assert EvidenceEntry.from_factor("zero", Odds(0, 1)).delta_jl == -math.inf
    assert EvidenceEntry.from_factor("inf", math.inf).delta_jl == math.inf
    assert EvidenceEntry.from_factor("half", 0.5).delta_jl == pytest.approx(math.log10(0.5))


@given(finite_odds)
def test_round_trip(odds):
    back = odds_from_prob(prob_from_odds(odds))
    assert back == odds
    assert jl_from_odds(back) == pytest.approx(jl_from_odds(odds), abs=1e-12)


@given(st.lists(st.fractions(min_value=Fraction(1, 1000), max_value=1000), max_size=60))
def test_additivity(factors):
    ledger = OddsLedger()
    product = Fraction(1)
    for i, f in enumerate(factors):
        ledger = ledger.append(EvidenceEntry.from_factor(f"e{i}", f))
        product *= f
    assert ledger.current_jl == pytest.approx(jl_from_odds(product), abs=1e-9)
    assert ledger.current_jl == pytest.approx(
        ledger.initial_jl + math.fsum(e.delta_jl for e in ledger.entries), abs=1e-12 * max(1, len(factors))
    )


@given(finite_odds, finite_odds)
def test_prob_monotone(a, b):
    if a < b:
        assert prob_from_odds(a) < prob_from_odds(b)
    elif a == b:
        assert prob_from_odds(a) == prob_from_odds(b)
