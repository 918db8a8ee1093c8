"""
Drawing from a bag
==================

Seeded draws with replacement, followed through the predictive odds.  The
same seed always gives the same beans.
"""

from beanbag import RngSpec, run_experiment

###############################################################################
# A short traced run.

trace = run_experiment(0.3, 12, RngSpec(seed=2024))
for step in trace.steps:
    print(f"{step.index:2d} {step.color.value}  factor {str(step.factor):>5}  odds {step.odds}")
s = trace.summary
print("final:", s.counts, "P(white next) =", s.p_white, f"(beta sd {s.beta_sd:.4f})")

###############################################################################
# Long runs only need the tallies; the final odds are exact either way.

for n in (100, 10_000, 1_000_000):
    s = run_experiment(0.3, n, RngSpec(seed=7), trace=False).summary
    print(f"n = {n:>9,}: white fraction {s.counts.n_white / n:.4f}, P(white next) = {float(s.p_white):.5f}")
