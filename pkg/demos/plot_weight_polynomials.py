"""
Counting sections
=================

Lattice points of kP count sections of -kK.  Grading them by the order of
vanishing along a toric divisor gives the weight polynomial of the basic
test configuration, whose top coefficients reproduce eta and the
Donaldson-Futaki invariant without any volume computation.
"""

import numpy as np

from divstab import ToricFano, df_from_weights, eta_from_weights, toric_eta, weight_series
from divstab.exact import fmt
from divstab.modelseq import df_from_eta

bl1 = ToricFano(((1, 0), (0, 1), (-1, -1), (1, 1)))

# %%
s = weight_series(bl1, 3, r=1)
print("k   ", s.ks)
print("h0  ", s.h0_values)
print("w(k)", s.w_values)
print("fitted w:", [fmt(c) for c in s.fitted_w.coeffs])

# %%
# The counts grow like vol(P) k^2 with vol(P) = 4.
ks = np.array(s.ks)
print(np.array(s.h0_values) / ks**2)

# %%
print("eta  weights", fmt(eta_from_weights(s)), " polytope", fmt(toric_eta(bl1, 3)))
print("DF   weights", fmt(df_from_weights(s, 2, 8)), " from eta", fmt(df_from_eta(eta_from_weights(s), 2, 1, 8)))
