"""
From many boxes to a continuum
==============================

With a uniform prior on the white fraction, the posterior after equal numbers
of white and black draws is centred on 1/2 and narrows as draws accumulate,
while the probability that the next bean is white stays exactly 1/2.
"""

import numpy as np

from beanbag import Counts, DiscreteHypothesisSpace, curve, predictive, predictive_white
from beanbag.continuum import FIGURE_COUNTS, sd

###############################################################################
# The six density curves, summarized by their peak height and spread.

for counts in FIGURE_COUNTS:
    c = curve(counts, 1001)
    print(
        f"n = {counts.total():3d}: peak {c.density.max():6.3f} at p = {c.argmax():.3f}, "
        f"sd {sd(counts):.4f}, P(white next) = {predictive_white(counts)}"
    )

###############################################################################
# To draw them, e.g. with matplotlib:
#
#     for counts in FIGURE_COUNTS:
#         c = curve(counts)
#         plt.plot(c.p, c.density)

###############################################################################
# A fine grid of discrete boxes gives back Laplace's rule.

space = DiscreteHypothesisSpace.midpoint_grid(10_000)
for counts in (Counts(0, 20), Counts(3, 1), Counts(70, 130)):
    print(counts, f"{predictive(counts, space):.8f}", f"{float(predictive_white(counts)):.8f}")
print("max |difference| on a few points:", np.max([
    abs(predictive(Counts(w, 10), space) - float(predictive_white(Counts(w, 10)))) for w in range(11)
]))
