"""
Which box?
==========

Two boxes with known white fractions.  Here the weight of each draw does not
depend on what came before, so the log-odds are a plain sum of arguments.
"""

from beanbag import Color, Counts, DiscreteHypothesisSpace, combined_odds, posterior, predictive, single_delta_jl

###############################################################################
# With p2 = 1 - p1 a white and a black draw carry equal and opposite weight,
# so only the difference of the tallies matters.

p1, p2 = 0.25, 0.75
print("dJL(white) =", round(single_delta_jl(Color.WHITE, p1, p2), 4))
print("dJL(black) =", round(single_delta_jl(Color.BLACK, p1, p2), 4))
for counts in (Counts(0, 20), Counts(990, 1010)):
    print(counts, "odds box1:box2 =", f"{combined_odds(counts, p1, p2):.6g}")

###############################################################################
# Without that symmetry the total number of draws matters too.

p1, p2 = 0.3, 0.6
for counts in (Counts(0, 20), Counts(990, 1010)):
    print(counts, "odds box1:box2 =", f"{combined_odds(counts, p1, p2):.6g}")

###############################################################################
# Many boxes: the predictive probability is the posterior-weighted mean of
# the white fractions.  A box that cannot produce an observed color drops out.

space = DiscreteHypothesisSpace([0.0, 0.25, 0.5, 0.75, 1.0])
counts = Counts(2, 1)
print("posterior:", posterior(counts, space).weights.round(4))
print("P(next is white):", round(predictive(counts, space), 4))
