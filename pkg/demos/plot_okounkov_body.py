"""
An Okounkov body obstruction
============================

If the first coordinate of the barycenter of an Okounkov body of -K
exceeds 1, the Fano cannot be K-semistable.  For the flag variety W6 the
body along a flag through a (-1)-curve stays below that bound.
"""

from divstab import Polytope, okounkov_barycenter_verdict
from divstab.exact import fmt
from divstab.polytope import moment

# %%
# 0 <= v1, v2 <= 2 and 0 <= v3 <= 2 - v1 + v2, written as <u, a> >= b.
body = Polytope.from_inequalities([
    (1, 0, 0, 0), (-1, 0, 0, -2),
    (0, 1, 0, 0), (0, -1, 0, -2),
    (0, 0, 1, 0), (-1, 1, -1, -2),
])
rep = okounkov_barycenter_verdict(body)
print("volume", fmt(body.volume))
print("barycenter", [fmt(c) for c in rep.barycenter], rep.obstruction.value)
print("integral of v2", fmt(moment(body, [0, 1, 0])))

# %%
shifted = Polytope.box([1, 1, 1], [2, 2, 2])
print(okounkov_barycenter_verdict(shifted).obstruction.value)
