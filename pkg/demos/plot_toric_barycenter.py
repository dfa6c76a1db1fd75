"""
Toric Fanos and the barycenter test
===================================

A toric Fano is divisorially semistable exactly when the barycenter of its
anticanonical polytope sits at the origin, and it is never divisorially
stable.  We check this on the first few del Pezzo surfaces.
"""

from divstab import ToricFano, semistability_verdict, toric_eta, toric_eta_by_slices
from divstab.exact import fmt

# %%
# The blowup of the plane in one point: rays of P2 plus (1, 1).
bl1 = ToricFano(((1, 0), (0, 1), (-1, -1), (1, 1)), "Bl_1 P2")
print([[fmt(c) for c in v] for v in bl1.polytope.vertices])

rep = semistability_verdict(bl1)
print("barycenter", [fmt(c) for c in rep.barycenter])
print("verdict   ", rep.verdict.value, "witness ray", bl1.rays[rep.witness])

# %%
# Per-ray data.  eta is computed from the moment of P and, independently,
# from the piecewise volume function x -> vol(-K - xD).
for r in rep.per_ray:
    print(r.ray, "tau =", fmt(r.tau), "eta =", fmt(r.eta), "by slices:", fmt(toric_eta_by_slices(bl1, r.index)))

# %%
# Blowing up three points restores the symmetry.
bl3 = ToricFano(((1, 0), (0, 1), (-1, -1), (1, 1), (0, -1), (-1, 0)), "Bl_3 P2")
rep3 = semistability_verdict(bl3)
print(rep3.verdict.value, [fmt(toric_eta(bl3, i)) for i in range(6)])
