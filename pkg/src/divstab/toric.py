"""Toric Q-Fano varieties given by their fan rays.

Only the primitive ray generators enter: the anticanonical polytope
``P = {u : <u, v> >= -1 for every ray v}`` depends on nothing else.
For the torus-invariant divisor ``D_v`` of a ray ``v``:

* ``vol(-K - x D_v) = n! * vol(P ∩ {<u, v> >= -1 + x})``
* ``tau(D_v) = 1 + max_P <u, v>``
* ``eta(D_v) = n! * (vol(P) - integral_P (<u, v> + 1) du)
             = -n! * vol(P) * <b_P, v>``
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial, gcd
from typing import Sequence

from .errors import NotFano, Unbounded, ZeroVolume
from .exact import RatVector, dot, rat
from .polynomial import RatPolynomial, integrate, interpolate
from .polytope import HalfSpace, Polytope, barycenter, halfspace_slice, moment


@dataclass(frozen=True)
class ToricFano:
    """Fan ray data for a toric Q-Fano variety."""

    rays: tuple[tuple[int, ...], ...]
    name: str | None = None
    dim: int = field(default=0)

    def __post_init__(self):
        rays = tuple(tuple(int(c) for c in r) for r in self.rays)
        if not rays:
            raise ValueError("a fan needs at least one ray")
        n = len(rays[0])
        if self.dim and self.dim != n:
            raise ValueError(f"declared dimension {self.dim} but rays have length {n}")
        for r in rays:
            if len(r) != n:
                raise ValueError("rays have inconsistent lengths")
            if all(c == 0 for c in r):
                raise ValueError("zero ray")
            if gcd(*r) != 1:
                raise ValueError(f"ray {r} is not primitive")
        if len(set(rays)) != len(rays):
            raise ValueError("rays must be pairwise distinct")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "dim", n)
        # fail fast: the polytope must exist and be full-dimensional
        self.polytope

    @cached_property
    def polytope(self) -> Polytope:
        return build_anticanonical_polytope(self)

    def ray_index(self, ray: Sequence[int]) -> int:
        return self.rays.index(tuple(ray))


def build_anticanonical_polytope(X: ToricFano) -> Polytope:
    """``{u : <u, v> >= -1}`` over the rays, in ray order."""
    hs = [HalfSpace(v, -1) for v in X.rays]
    try:
        P = Polytope(hs, len(X.rays[0]))
    except Unbounded as exc:
        raise NotFano(f"anticanonical polytope is unbounded ({exc})") from None
    # offsets are all -1 < 0, so the origin is interior as soon as P has interior
    if P.is_degenerate:
        raise NotFano("anticanonical polytope has empty interior")
    return P


def _ray(X: ToricFano, ray: int) -> tuple[int, ...]:
    if not 0 <= ray < len(X.rays):
        raise IndexError(f"ray index {ray} out of range for {len(X.rays)} rays")
    return X.rays[ray]


def pseudoeffective_threshold(X: ToricFano, ray: int) -> Fraction:
    v = _ray(X, ray)
    return 1 + max(dot(u, v) for u in X.polytope.vertices)


def slice_polytope(X: ToricFano, ray: int, x) -> Polytope:
    """``P ∩ {<u, v> >= -1 + x}``."""
    return halfspace_slice(X.polytope, HalfSpace(_ray(X, ray), -1 + rat(x)))


def toric_volume_at(X: ToricFano, ray: int, x) -> Fraction:
    """``vol(-K_X - x D)`` for the divisor of the given ray."""
    x = rat(x)
    if x < 0:
        raise ValueError("x must be nonnegative")
    return factorial(X.dim) * slice_polytope(X, ray, x).volume


def slice_volume_pieces(X: ToricFano, ray: int) -> list[tuple[Fraction, Fraction, RatPolynomial]]:
    """Piecewise-polynomial form of ``x -> vol(-K - x D)`` on ``[0, tau]``.

    Breakpoints are the values ``1 + <w, v>`` at the vertices ``w`` of P;
    between consecutive ones the slice volume is a polynomial of degree
    <= n, recovered by exact interpolation at n + 1 interior nodes.
    """
    v = _ray(X, ray)
    n = X.dim
    tau = pseudoeffective_threshold(X, ray)
    cuts = sorted({1 + dot(u, v) for u in X.polytope.vertices} | {Fraction(0)})
    cuts = [c for c in cuts if 0 <= c <= tau]
    pieces = []
    for lo, hi in zip(cuts, cuts[1:]):
        xs = [lo + (hi - lo) * Fraction(i + 1, n + 2) for i in range(n + 1)]
        ys = [toric_volume_at(X, ray, x) for x in xs]
        pieces.append((lo, hi, interpolate(xs, ys)))
    return pieces


def restricted_slice_measure(X: ToricFano, ray: int) -> list[tuple[Fraction, Fraction, RatPolynomial]]:
    """``Q(x) = -(1/n!) d/dx vol(-K - xD)`` on each linearity interval."""
    n = X.dim
    return [(lo, hi, p.derivative() * Fraction(-1, factorial(n))) for lo, hi, p in slice_volume_pieces(X, ray)]


def toric_eta(X: ToricFano, ray: int) -> Fraction:
    """Exact ``eta(D_v) = n! (vol P - integral_P (<u, v> + 1) du)``."""
    v = _ray(X, ray)
    P = X.polytope
    return factorial(X.dim) * (P.volume - (moment(P, v) + P.volume))


def toric_eta_by_slices(X: ToricFano, ray: int) -> Fraction:
    """``eta`` from ``vol(-K) - integral_0^tau vol(-K - xD) dx`` over the slice pieces."""
    pieces = slice_volume_pieces(X, ray)
    return toric_volume_at(X, ray, 0) - sum(integrate(p, lo, hi) for lo, hi, p in pieces)


class ToricVerdict(enum.Enum):
    NOT_SEMISTABLE = "NotSemistable"
    SEMISTABLE_NOT_STABLE = "SemistableNotStable"


@dataclass(frozen=True)
class RayReport:
    index: int
    ray: tuple[int, ...]
    tau: Fraction
    eta: Fraction


@dataclass(frozen=True)
class ToricStabilityReport:
    barycenter: RatVector
    volume: Fraction
    per_ray: tuple[RayReport, ...]
    verdict: ToricVerdict
    witness: int | None = None


def semistability_verdict(X: ToricFano) -> ToricStabilityReport:
    """Divisorial semistability of ``(X, -K_X)`` via the barycenter of P.

    Toric Fanos are never divisorially stable.  When the barycenter ``b`` is
    nonzero, the witness is the facet hit by the half-line from ``b``
    through the origin, i.e. a ray maximising ``<b, v>``; ties go to the
    lowest ray index.
    """
    P = X.polytope
    b = barycenter(P)
    per_ray = tuple(
        RayReport(i, v, pseudoeffective_threshold(X, i), toric_eta(X, i))
        for i, v in enumerate(X.rays)
    )
    if all(c == 0 for c in b):
        return ToricStabilityReport(b, P.volume, per_ray, ToricVerdict.SEMISTABLE_NOT_STABLE)
    pairings = [dot(b, v) for v in X.rays]
    best = max(pairings)
    witness = pairings.index(best)
    return ToricStabilityReport(b, P.volume, per_ray, ToricVerdict.NOT_SEMISTABLE, witness)


def exit_point(X: ToricFano) -> RatVector | None:
    """Where the half-line ``{(1 - t) b_P : t >= 0}`` leaves P (None if ``b_P = 0``)."""
    b = barycenter(X.polytope)
    if all(c == 0 for c in b):
        return None
    s = 1 / max(dot(b, v) for v in X.rays)
    return tuple(-s * c for c in b)


class OkounkovObstruction(enum.Enum):
    CONSISTENT_WITH_K_STABLE = "ConsistentWithKStable"
    CONSISTENT_WITH_K_SEMISTABLE_ONLY = "ConsistentWithKSemistableOnly"
    OBSTRUCTS_K_SEMISTABILITY = "ObstructsKSemistability"


@dataclass(frozen=True)
class OkounkovReport:
    barycenter: RatVector
    b1: Fraction
    obstruction: OkounkovObstruction


def okounkov_barycenter_verdict(body: Polytope) -> OkounkovReport:
    """Compare the first barycenter coordinate of an Okounkov body of ``-K_X`` with 1.

    ``b1 > 1`` rules out K-semistability; ``b1 = 1`` rules out K-stability.
    """
    if body.volume == 0:
        raise ZeroVolume("Okounkov body must have positive volume")
    b = barycenter(body)
    b1 = b[0]
    if b1 < 1:
        verdict = OkounkovObstruction.CONSISTENT_WITH_K_STABLE
    elif b1 == 1:
        verdict = OkounkovObstruction.CONSISTENT_WITH_K_SEMISTABLE_ONLY
    else:
        verdict = OkounkovObstruction.OBSTRUCTS_K_SEMISTABILITY
    return OkounkovReport(b, b1, verdict)


def transform_fan(X: ToricFano, T: Sequence[Sequence[int]]) -> ToricFano:
    """Apply ``T`` in ``GL(n, Z)`` to every ray."""
    n = X.dim
    rays = [tuple(sum(int(T[i][j]) * v[j] for j in range(n)) for i in range(n)) for v in X.rays]
    return ToricFano(tuple(rays), X.name)


__all__ = [
    "ToricFano",
    "build_anticanonical_polytope",
    "pseudoeffective_threshold",
    "toric_volume_at",
    "slice_volume_pieces",
    "restricted_slice_measure",
    "toric_eta",
    "toric_eta_by_slices",
    "semistability_verdict",
    "exit_point",
    "okounkov_barycenter_verdict",
    "ToricVerdict",
    "OkounkovObstruction",
    "ToricStabilityReport",
    "OkounkovReport",
    "RayReport",
    "transform_fan",
]
