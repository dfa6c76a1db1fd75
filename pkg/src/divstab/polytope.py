"""Bounded rational polytopes in H-representation.

Vertices come from exhaustive intersection of ``dim``-subsets of the
bounding hyperplanes; the inputs here have at most a dozen facets in
dimension <= 4, so the combinatorial approach is cheap and stays exact.
Volumes and moments are summed over a pulling triangulation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from .errors import Unbounded, ZeroVolume
from .exact import RatVector, det, dot, nullspace, rank, rat, solve, sub, vec

MAX_DIM = 4


@dataclass(frozen=True, init=False)
class HalfSpace:
    """The closed half-space ``{u : <u, normal> >= offset}``."""

    normal: RatVector
    offset: Fraction

    def __init__(self, normal: Iterable, offset=0):
        normal = vec(normal)
        if not normal or all(c == 0 for c in normal):
            raise ValueError("half-space normal must be a nonzero vector")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", rat(offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def contains(self, u: Sequence) -> bool:
        return dot(u, self.normal) >= self.offset

    def is_tight(self, u: Sequence) -> bool:
        return dot(u, self.normal) == self.offset

    def complement(self) -> "HalfSpace":
        """The opposite closed half-space; the two share the boundary hyperplane."""
        return HalfSpace([-c for c in self.normal], -self.offset)


class Vertices(list):
    """A vertex list that also records whether the polytope lacks interior."""

    degenerate: bool = False


def _check_system(halfspaces: Sequence[HalfSpace], dim: int) -> None:
    if not 1 <= dim <= MAX_DIM:
        raise ValueError(f"dimension must be between 1 and {MAX_DIM}, got {dim}")
    if not halfspaces:
        raise ValueError("at least one half-space is required")
    for h in halfspaces:
        if h.dim != dim:
            raise ValueError(f"half-space of dimension {h.dim} in a {dim}-dimensional system")


def recession_direction(halfspaces: Sequence[HalfSpace], dim: int) -> RatVector | None:
    """A nonzero ``d`` with ``<d, normal> >= 0`` for every half-space, if any.

    When the normals have full rank the recession cone is pointed, so it is
    nontrivial exactly when one of its extreme rays survives; those rays are
    cut out by ``dim - 1`` independent normals.
    """
    normals = [h.normal for h in halfspaces]
    line = nullspace(normals, dim)
    if line:
        return line[0]
    for subset in combinations(normals, dim - 1):
        kernel = nullspace(list(subset), dim)
        if len(kernel) != 1:
            continue
        d = kernel[0]
        for cand in (d, tuple(-c for c in d)):
            if all(dot(cand, a) >= 0 for a in normals):
                return cand
    return None


def affine_rank(points: Sequence[Sequence]) -> int:
    """Affine dimension of a point set (-1 when empty)."""
    if not points:
        return -1
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def vertex_enumerate(halfspaces: Sequence[HalfSpace], dim: int) -> Vertices:
    """Exact vertex set of ``{u : <u, a_i> >= b_i}``, lexicographically sorted.

    Raises :class:`Unbounded` if the system admits a recession direction.
    An empty or lower-dimensional intersection is not an error: the result
    simply carries ``degenerate = True``.
    """
    halfspaces = list(halfspaces)
    _check_system(halfspaces, dim)
    d = recession_direction(halfspaces, dim)
    if d is not None:
        raise Unbounded(f"unbounded along direction {tuple(str(c) for c in d)}")
    found = set()
    for subset in combinations(halfspaces, dim):
        x = solve([h.normal for h in subset], [h.offset for h in subset])
        if x is None or x in found:
            continue
        if all(h.contains(x) for h in halfspaces):
            found.add(x)
    out = Vertices(sorted(found))
    out.degenerate = affine_rank(out) < dim
    return out


class Polytope:
    """A bounded convex polytope ``{u : <u, a_i> >= b_i}``.

    Instances are immutable by convention; vertices are computed eagerly
    (so construction fails fast on unbounded input) and the triangulation
    lazily.
    """

    def __init__(self, halfspaces: Iterable[HalfSpace], dim: int | None = None):
        halfspaces = tuple(halfspaces)
        if dim is None:
            if not halfspaces:
                raise ValueError("cannot infer dimension from an empty system")
            dim = halfspaces[0].dim
        self.dim = dim
        self.halfspaces = halfspaces
        self.vertices: list[RatVector] = vertex_enumerate(halfspaces, dim)

    @classmethod
    def from_inequalities(cls, rows: Iterable[Sequence], dim: int | None = None) -> "Polytope":
        """Build from rows ``(a_1, ..., a_n, b)`` meaning ``<u, a> >= b``."""
        return cls([HalfSpace(r[:-1], r[-1]) for r in rows], dim)

    @classmethod
    def box(cls, lo: Sequence, hi: Sequence) -> "Polytope":
        n = len(lo)
        hs = []
        for i in range(n):
            e = [0] * n
            e[i] = 1
            hs.append(HalfSpace(e, lo[i]))
            hs.append(HalfSpace([-c for c in e], -rat(hi[i])))
        return cls(hs, n)

    @property
    def is_degenerate(self) -> bool:
        return self.vertices.degenerate

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, u: Sequence) -> bool:
        return all(h.contains(u) for h in self.halfspaces)

    @cached_property
    def _tight(self) -> list[frozenset]:
        # for each half-space, the indices of the vertices on its boundary
        return [
            frozenset(i for i, v in enumerate(self.vertices) if h.is_tight(v))
            for h in self.halfspaces
        ]

    @cached_property
    def triangulation(self) -> list[tuple[int, ...]]:
        """Pulling triangulation: cone from the lex-smallest vertex over the
        (recursively triangulated) facets that avoid it."""
        if self.is_degenerate:
            return []
        cache: dict = {}

        def tri(face: frozenset, k: int) -> list[tuple[int, ...]]:
            key = face
            if key in cache:
                return cache[key]
            apex = min(face)
            if k == 0:
                res = [(apex,)]
            else:
                res = []
                seen = set()
                for tight in self._tight:
                    sub_face = face & tight
                    if sub_face == face or apex in sub_face or sub_face in seen:
                        continue
                    if affine_rank([self.vertices[i] for i in sub_face]) != k - 1:
                        continue
                    seen.add(sub_face)
                    res.extend((apex,) + s for s in tri(sub_face, k - 1))
            cache[key] = res
            return res

        return tri(frozenset(range(len(self.vertices))), self.dim)

    def simplex_volume(self, simplex: Sequence[int]) -> Fraction:
        v0 = self.vertices[simplex[0]]
        rows = [sub(self.vertices[i], v0) for i in simplex[1:]]
        return abs(det(rows)) / factorial(self.dim)

    def simplex_centroid(self, simplex: Sequence[int]) -> RatVector:
        pts = [self.vertices[i] for i in simplex]
        return tuple(sum(c) / len(pts) for c in zip(*pts))

    @cached_property
    def volume(self) -> Fraction:
        return sum((self.simplex_volume(s) for s in self.triangulation), Fraction(0))

    @cached_property
    def moment_vector(self) -> RatVector:
        """``integral_P u du`` as a vector."""
        acc = [Fraction(0)] * self.dim
        for s in self.triangulation:
            vol = self.simplex_volume(s)
            for i, c in enumerate(self.simplex_centroid(s)):
                acc[i] += vol * c
        return tuple(acc)

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.halfspaces)})"


def volume(P: Polytope) -> Fraction:
    """Exact Lebesgue volume (not lattice-normalised); 0 for degenerate P."""
    return P.volume


def moment(P: Polytope, w: Sequence) -> Fraction:
    """``integral_P <u, w> du``."""
    w = vec(w)
    if len(w) != P.dim:
        raise ValueError(f"functional of dimension {len(w)} on a {P.dim}-dimensional polytope")
    return dot(P.moment_vector, w)


def barycenter(P: Polytope) -> RatVector:
    vol = P.volume
    if vol == 0:
        raise ZeroVolume("barycenter of a polytope with empty interior")
    return tuple(m / vol for m in P.moment_vector)


def halfspace_slice(P: Polytope, h: HalfSpace) -> Polytope:
    """``P`` intersected with ``h``; possibly degenerate or empty."""
    return Polytope(P.halfspaces + (h,), P.dim)


def affine_image(P: Polytope, T: Sequence[Sequence], t: Sequence) -> Polytope:
    """Image of ``P`` under ``u -> T u + t`` for invertible ``T``."""
    n = P.dim
    t = vec(t)
    # u = T^{-1}(y - t), so <u, a> = <y - t, T^{-T} a>
    Tt = [[rat(T[j][i]) for j in range(n)] for i in range(n)]
    hs = []
    for h in P.halfspaces:
        a2 = solve(Tt, h.normal)
        if a2 is None:
            raise ValueError("transformation matrix is singular")
        hs.append(HalfSpace(a2, h.offset + dot(t, a2)))
    return Polytope(hs, n)
