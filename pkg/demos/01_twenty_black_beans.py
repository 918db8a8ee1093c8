"""
Twenty black beans, then 1010 black and 990 white
=================================================

Both samples have twenty more black beans than white ones.  If every bean
were an independent argument of fixed weight, the two samples would give the
same belief about the next bean.  They do not.
"""

import math

from beanbag import Color, Counts, replay, telescoped_factor, update_factor
from beanbag.continuum import predictive_black

B, W = Color.BLACK, Color.WHITE

###############################################################################
# Each black bean moves the white:black odds by a factor that depends on how
# many blacks have already been seen.  The first one halves the odds, the
# twentieth barely moves them.

run = replay([B] * 20)
for step in run.steps[:4] + run.steps[-1:]:
    print(f"draw {step.index:2d}: factor {step.factor}, dJL {step.delta_jl:+.3f}")
print("odds after 20 blacks:", run.state.odds_white_black)
print("P(next is black):", run.state.p_black, f"= {float(run.state.p_black):.4f}")

###############################################################################
# A first white bean is a strong argument again: it doubles the odds.

print("factor of a 21st, white bean:", update_factor(W, run.state.counts))

###############################################################################
# With 1010 black and 990 white the surviving twenty black "arguments" are the
# late, weak ones.  The product of all 2000 factors telescopes to 991/1011.

counts = Counts(990, 1010)
factor = telescoped_factor(counts)
print("overall factor:", factor, f"(dJL {math.log10(factor):+.4f})")
print("P(next is black):", predictive_black(counts), f"= {float(predictive_black(counts)):.4f}")
