"""
Picard rank two threefolds
==========================

Blowing up a smooth curve in a Picard-rank-one Fano threefold gives a
two-segment model sequence for the exceptional divisor (or for the strict
transform of a surface through the curve).  The closed form for eta / 3 is
checked against the sequence, whose V(0) recovers the anticanonical degree.
"""

from divstab import catalog, curve_blowup_sequence, eta_curve_blowup_3fold, eta_volume
from divstab.exact import fmt
from divstab.modelseq import volume_at

# %%
for entry in catalog.entries("curve_blowup_params"):
    p = entry.parse().astuple()
    seq = curve_blowup_sequence(*p)
    print(f"{entry.id:10s} eta/3 = {fmt(eta_curve_blowup_3fold(*p)):>7s}"
          f"   from sequence {fmt(eta_volume(seq) / 3):>7s}   (-K)^3 = {fmt(volume_at(seq, 0))}")

# %%
# The blowup of a complete intersection of two divisors: eta is negative
# once d2 >= 2 d1.
from divstab import blowup_ci_sequence, eta_blowup_ci

for d1, d2 in [(1, 2), (1, 3), (2, 3)]:
    print(d1, d2, fmt(eta_blowup_ci(3, 2, 3 + d2, d1, d2)), fmt(eta_volume(blowup_ci_sequence(3, 2, 3 + d2, d1, d2))))
