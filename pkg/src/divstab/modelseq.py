"""Volume functions and eta(D) from ample-model-sequence data.

A sequence is a list of segments ``[tau_lo, tau_hi]`` with the mixed
intersection numbers ``m_j = ((-K_i)^(n-j) . D_i^j)`` of the model on
that segment.  From them

* ``V_i(x) = sum_j C(n, j) (-x)^j m_j``            (volume of ``-K - xD``)
* ``p_i(x) = sum_j C(n-1, j) (-x)^j m_{j+1}``      (restricted volume)

and ``p_i = -(1/n) V_i'`` identically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import InvalidSequence, NegativeX, OutOfRange
from .exact import fmt, rat
from .polynomial import RatPolynomial, binomial_expansion, integrate, rational_roots


@dataclass(frozen=True, init=False)
class ModelSegment:
    tau_lo: Fraction
    tau_hi: Fraction
    intersections: tuple[Fraction, ...]

    def __init__(self, tau_lo, tau_hi, intersections: Iterable):
        object.__setattr__(self, "tau_lo", rat(tau_lo))
        object.__setattr__(self, "tau_hi", rat(tau_hi))
        object.__setattr__(self, "intersections", tuple(rat(m) for m in intersections))

    @property
    def n(self) -> int:
        return len(self.intersections) - 1

    @property
    def volume_poly(self) -> RatPolynomial:
        return binomial_expansion(self.n, self.intersections)

    @property
    def restricted_poly(self) -> RatPolynomial:
        return binomial_expansion(self.n - 1, self.intersections[1:])


@dataclass(frozen=True)
class ModelSequence:
    n: int
    segments: tuple[ModelSegment, ...]

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def tau(self) -> Fraction:
        """The pseudo-effective threshold (last breakpoint)."""
        return self.segments[-1].tau_hi

    @property
    def breakpoints(self) -> list[Fraction]:
        return [self.segments[0].tau_lo] + [s.tau_hi for s in self.segments]

    @classmethod
    def from_volume_polys(cls, n: int, pieces: Sequence[tuple]) -> "ModelSequence":
        """Recover intersection vectors from ``(lo, hi, V)`` volume polynomials."""
        segs = []
        for lo, hi, V in pieces:
            if V.degree > n:
                raise ValueError(f"volume polynomial of degree {V.degree} > {n}")
            m = [V.coeff(j) / (comb(n, j) * (-1) ** j) for j in range(n + 1)]
            segs.append(ModelSegment(lo, hi, m))
        return cls(n, tuple(segs))

    @classmethod
    def from_restricted_polys(cls, n: int, breakpoints: Sequence, polys: Sequence[RatPolynomial]) -> "ModelSequence":
        """Integrate restricted volumes back from ``V(tau) = 0``.

        ``V_i(x) = V(tau_i) + n * integral_x^{tau_i} p_i``, segment by
        segment from the right, so the result is continuous by construction
        (C1 only if the given ``p_i`` agree at the breakpoints).
        """
        bps = [rat(b) for b in breakpoints]
        if len(bps) != len(polys) + 1:
            raise ValueError("need one more breakpoint than polynomials")
        pieces = []
        right_value = Fraction(0)
        for lo, hi, p in reversed(list(zip(bps, bps[1:], polys))):
            P = p.antiderivative()
            V = (P(hi) - P) * n + right_value
            pieces.append((lo, hi, V))
            right_value = V(lo)
        return cls.from_volume_polys(n, pieces[::-1])

    def split(self, index: int, at) -> "ModelSequence":
        """Insert a breakpoint inside segment ``index`` without changing its data."""
        at = rat(at)
        s = self.segments[index]
        if not s.tau_lo < at < s.tau_hi:
            raise ValueError("split point must lie strictly inside the segment")
        parts = (ModelSegment(s.tau_lo, at, s.intersections), ModelSegment(at, s.tau_hi, s.intersections))
        return ModelSequence(self.n, self.segments[:index] + parts + self.segments[index + 1:])


@dataclass(frozen=True)
class Issue:
    segment: int | None
    message: str

    def __str__(self):
        return self.message if self.segment is None else f"segment {self.segment}: {self.message}"


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self):
        return self.ok


def _positivity_samples(seg: ModelSegment) -> list[Fraction]:
    lo, hi = seg.tau_lo, seg.tau_hi
    pts = {lo, hi, (lo + hi) / 2}
    dp = seg.restricted_poly.derivative()
    if dp.degree >= 0:
        pts.update(r for r in rational_roots(dp) if lo < r < hi)
    return sorted(pts)


def validate_sequence(seq: ModelSequence) -> ValidationReport:
    """Check every structural invariant and report each violation.

    Positivity of the restricted volume is only sampled (segment ends,
    midpoint, rational critical points): a negative sample is an error,
    an interior zero only a warning.
    """
    rep = ValidationReport()
    err = lambda i, msg: rep.errors.append(Issue(i, msg))
    n = seq.n
    if n < 1:
        err(None, f"dimension must be positive, got {n}")
        return rep
    if not seq.segments:
        err(None, "no segments")
        return rep
    shapes_ok = True
    for i, s in enumerate(seq.segments):
        if len(s.intersections) != n + 1:
            err(i, f"expected {n + 1} intersection numbers, got {len(s.intersections)}")
            shapes_ok = False
        if not s.tau_lo < s.tau_hi:
            err(i, f"breakpoints not strictly increasing ({fmt(s.tau_lo)} >= {fmt(s.tau_hi)})")
    if seq.segments[0].tau_lo != 0:
        err(0, f"first breakpoint must be 0, got {fmt(seq.segments[0].tau_lo)}")
    for i, (a, b) in enumerate(zip(seq.segments, seq.segments[1:])):
        if a.tau_hi != b.tau_lo:
            err(i + 1, f"gap between segments at {fmt(a.tau_hi)} and {fmt(b.tau_lo)}")
    if not shapes_ok:
        return rep
    for i, (a, b) in enumerate(zip(seq.segments, seq.segments[1:])):
        t = a.tau_hi
        if a.tau_hi != b.tau_lo:
            continue
        if a.volume_poly(t) != b.volume_poly(t):
            err(i + 1, f"V discontinuous at x={fmt(t)} ({fmt(a.volume_poly(t))} vs {fmt(b.volume_poly(t))})")
        elif a.restricted_poly(t) != b.restricted_poly(t):
            err(i + 1, f"V not C1 at x={fmt(t)} (restricted volumes {fmt(a.restricted_poly(t))} vs {fmt(b.restricted_poly(t))})")
    last = seq.segments[-1]
    if last.volume_poly(last.tau_hi) != 0:
        err(len(seq.segments) - 1, f"V does not vanish at tau={fmt(last.tau_hi)} (value {fmt(last.volume_poly(last.tau_hi))})")
    first = seq.segments[0]
    if first.volume_poly(0) <= 0:
        err(0, f"vol(-K) must be positive, got {fmt(first.volume_poly(0))}")
    for i, s in enumerate(seq.segments):
        if not s.tau_lo < s.tau_hi:
            continue
        p = s.restricted_poly
        for x in _positivity_samples(s):
            val = p(x)
            if val < 0:
                err(i, f"restricted volume negative at x={fmt(x)} ({fmt(val)})")
            elif val == 0 and s.tau_lo < x < s.tau_hi:
                rep.warnings.append(Issue(i, f"restricted volume vanishes inside the segment at x={fmt(x)}"))
    return rep


def _require_valid(seq: ModelSequence) -> None:
    rep = validate_sequence(seq)
    if not rep.ok:
        raise InvalidSequence(rep.errors)


def _segment_at(seq: ModelSequence, x: Fraction) -> ModelSegment:
    for s in seq.segments:
        if s.tau_lo <= x < s.tau_hi:
            return s
    return seq.segments[-1]


def volume_at(seq: ModelSequence, x) -> Fraction:
    """``vol(-K - xD)``; zero from ``tau`` on."""
    x = rat(x)
    if x < 0:
        raise NegativeX(f"x must be nonnegative, got {fmt(x)}")
    if x >= seq.tau:
        return Fraction(0)
    return _segment_at(seq, x).volume_poly(x)


def restricted_volume_at(seq: ModelSequence, x) -> Fraction:
    """``vol_{X|D}(-K - xD)`` on ``[0, tau]``; at ``tau`` the last segment is used."""
    x = rat(x)
    if not 0 <= x <= seq.tau:
        raise OutOfRange(f"x={fmt(x)} outside [0, {fmt(seq.tau)}]")
    return _segment_at(seq, x).restricted_poly(x)


def _weighted_restricted(seg: ModelSegment, n: int) -> Fraction:
    # n * integral (1 - x) p(x) dx over the segment
    return n * integrate(RatPolynomial([1, -1]) * seg.restricted_poly, seg.tau_lo, seg.tau_hi)


def eta_intersection(seq: ModelSequence) -> Fraction:
    """``eta(D) = sum_i n * integral (1 - x) p_i(x) dx``."""
    _require_valid(seq)
    return sum((_weighted_restricted(s, seq.n) for s in seq.segments), Fraction(0))


def eta_volume(seq: ModelSequence) -> Fraction:
    """``eta(D) = vol(-K) - integral_0^tau vol(-K - xD) dx``."""
    _require_valid(seq)
    total = sum((integrate(s.volume_poly, s.tau_lo, s.tau_hi) for s in seq.segments), Fraction(0))
    return seq.segments[0].volume_poly(0) - total


def slope_xi(seq: ModelSequence) -> Fraction:
    """Slope invariant: the first-segment part of ``eta_intersection``.

    The first breakpoint plays the role of the Seshadri constant, which is
    only guaranteed for Q-factorial X; no check is attempted here.
    """
    _require_valid(seq)
    return _weighted_restricted(seq.segments[0], seq.n)


def eta_scaled_divisor(seq: ModelSequence, c) -> Fraction:
    """``eta(D')`` for ``D' ~ c D``: the volume integral shrinks by ``1/c``."""
    c = rat(c)
    if c <= 0:
        raise ValueError("scale factor must be positive")
    _require_valid(seq)
    total = sum((integrate(s.volume_poly, s.tau_lo, s.tau_hi) for s in seq.segments), Fraction(0))
    return seq.segments[0].volume_poly(0) - total / c


def df_from_eta(eta, n: int, r: int, Kn) -> Fraction:
    """Donaldson-Futaki invariant of the basic semi test configuration.

    ``DF = r^(2n) (-K)^n eta / (2 (n!)^2)``.
    """
    Kn = rat(Kn)
    if Kn <= 0:
        raise ValueError("anticanonical degree must be positive")
    if r < 1:
        raise ValueError("r must be a positive integer")
    return Fraction(r ** (2 * n)) * Kn * rat(eta) / (2 * factorial(n) ** 2)
