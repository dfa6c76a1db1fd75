"""
eta from ample model sequences
==============================

A model sequence lists, for each interval of x, the mixed intersection
numbers ((-K)^(n-j) . D^j) on the model where -K - xD is ample.  From
them we get the volume function and eta in two ways.
"""

from divstab import ModelSegment, ModelSequence, eta_intersection, eta_volume, slope_xi, validate_sequence
from divstab.exact import fmt
from divstab.modelseq import volume_at

# %%
# The line through two blown-up points on Bl_2 P2.  Past x = 1 the two
# exceptional curves are contracted and the model is P2 itself.
seq = ModelSequence(2, (
    ModelSegment(0, 1, [7, 1, -1]),
    ModelSegment(1, 3, [9, 3, 1]),
))
print(validate_sequence(seq))
print("vol(-K - xD):", [fmt(volume_at(seq, x)) for x in range(4)])

# %%
# Both routes give -4/3, while the slope invariant only sees the first
# segment and comes out positive.
print("eta  (intersection)", fmt(eta_intersection(seq)))
print("eta  (volume)      ", fmt(eta_volume(seq)))
print("xi                 ", fmt(slope_xi(seq)))

# %%
# Broken data is reported rather than silently integrated.
bad = ModelSequence(2, (ModelSegment(0, 1, [7, 1, -1]), ModelSegment(1, 3, [10, 3, 1])))
for issue in validate_sequence(bad).errors:
    print(issue)
