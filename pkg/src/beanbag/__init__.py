"""Weight-of-evidence bookkeeping for draws from a bag of black and white beans."""

__version__ = "0.1.0"

from .evidence import (
    Color,
    ContradictoryEvidenceError,
    Counts,
    EvidenceEntry,
    EvidenceError,
    ImpossibleEvidenceError,
    Odds,
    OddsLedger,
    UndefinedEvidenceError,
    jl_from_odds,
    ledger_append,
    odds_from_prob,
    prob_from_odds,
)
from .discrete import (
    DiscreteHypothesisSpace,
    DiscretePosterior,
    combined_odds,
    likelihood,
    posterior,
    predictive,
    single_bayes_factor,
    single_delta_jl,
)
from .continuum import BetaPosterior, DensityCurve, curve, density, predictive_black, predictive_white
from .predictive_odds import (
    PredictiveState,
    apply_observation,
    initial_state,
    replay,
    telescoped_factor,
    update_factor,
)
from .sampler import RngSpec, SimulationTrace, draw_sequence, run_experiment
