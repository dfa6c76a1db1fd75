"""Closed-form eta values for a few families of Fano manifolds.

Each closed form comes with a builder for the model sequence of the same
geometry, so the two can be compared exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import ConstraintViolated, InvalidInterval
from .exact import rat
from .modelseq import ModelSegment, ModelSequence
from .polynomial import RatPolynomial, integrate


def eta_rho_one(n: int, c, Kn) -> Fraction:
    """eta(D) when ``-K_X ~ c D``: ``Kn (n + 1 - c) / (n + 1)``."""
    c, Kn = rat(c), rat(Kn)
    if n < 1 or c <= 0 or Kn <= 0:
        raise ConstraintViolated("need n >= 1, c > 0 and (-K)^n > 0")
    return Kn * (n + 1 - c) / (n + 1)


def rho_one_sequence(n: int, c, Kn) -> ModelSequence:
    """One segment ``[0, c]`` with ``m_j = Kn / c^j``."""
    c, Kn = rat(c), rat(Kn)
    return ModelSequence(n, (ModelSegment(0, c, [Kn / c**j for j in range(n + 1)]),))


def _check_ci(n, On, r, d1, d2):
    if n < 3:
        raise ConstraintViolated(f"dimension must be at least 3, got {n}")
    if rat(On) <= 0:
        raise ConstraintViolated("degree of O(1) must be positive")
    if not 1 <= d1 < d2 <= r - 1:
        raise ConstraintViolated(f"need 1 <= d1 < d2 <= r - 1, got d1={d1}, d2={d2}, r={r}")


def eta_blowup_ci(n: int, On, r: int, d1: int, d2: int) -> Fraction:
    """Strict transform of ``D1`` on the blowup of ``Y`` along ``D1 ∩ D2``.

    ``Y`` has Picard group generated by ``O(1)`` with ``-K_Y = O(r)``,
    ``D_i ∈ |O(d_i)|`` and ``On = (O(1)^n)``.  With ``e = d2 - d1``::

        eta = On / ((n+1) d1 e^2) * ( -(e^2 - d1^2) (r - d1)^(n+1)
                                      - d1^2 ((n+1) e + r - d2) (r - d2)^n )

    Negative whenever ``d2 >= 2 d1``.
    """
    _check_ci(n, On, r, d1, d2)
    On = rat(On)
    e = d2 - d1
    bracket = -(e * e - d1 * d1) * (r - d1) ** (n + 1) - d1 * d1 * ((n + 1) * e + r - d2) * (r - d2) ** n
    return On * bracket / ((n + 1) * d1 * e * e)


def _blowup_ci_products(n, On, d1, d2):
    """``(H^(n-k) . F^k)`` on the blowup along ``C = D1 ∩ D2``.

    ``F`` is the projectivised normal bundle ``O(d1) + O(d2)`` over C, so
    for k >= 2 the product is ``-h_{k-2}(d1, d2) * deg C`` with ``h`` the
    complete homogeneous symmetric polynomial and ``deg C = d1 d2 On``.
    """
    out = [rat(On), Fraction(0)]
    for k in range(2, n + 1):
        h = sum(d1**i * d2 ** (k - 2 - i) for i in range(k - 1))
        out.append(-h * d1 * d2 * rat(On))
    return out


def _mixed(n, a, b, products):
    """``prod (a_H H + a_F F)^(n-j) (b_H H + b_F F)^j`` for each j, using
    the table ``products[k] = H^(n-k) F^k``."""
    res = []
    for j in range(n + 1):
        # bivariate expansion indexed by the power of F
        poly = [Fraction(1)]
        for (cH, cF) in [a] * (n - j) + [b] * j:
            new = [Fraction(0)] * (len(poly) + 1)
            for k, c in enumerate(poly):
                new[k] += c * cH
                new[k + 1] += c * cF
            poly = new
        res.append(sum(c * products[k] for k, c in enumerate(poly)))
    return res


def blowup_ci_sequence(n: int, On, r: int, d1: int, d2: int) -> ModelSequence:
    """Ample model sequence for the strict transform of D1.

    On ``[0, 1]`` the model is the blowup itself with ``-K = rH - F`` and
    ``D = d1 H - F``; past 1 the exceptional divisor leaves the positive
    part and the model is ``Y`` with ``D ~ d1 H`` up to ``tau = r / d1``.
    """
    _check_ci(n, On, r, d1, d2)
    On = rat(On)
    seg1 = _mixed(n, (r, -1), (d1, -1), _blowup_ci_products(n, On, d1, d2))
    seg2 = [Fraction(r) ** (n - j) * Fraction(d1) ** j * On for j in range(n + 1)]
    return ModelSequence(n, (ModelSegment(0, 1, seg1), ModelSegment(1, Fraction(r, d1), seg2)))


def _g1(n: int, r: int, x) -> Fraction:
    x = rat(x)
    return (Fraction(r) ** (n + 1) - (n * x + r) * (r - x) ** n) / (x * x)


@dataclass(frozen=True)
class SignedEta:
    """A closed-form result: ``value`` is None when only the sign is known."""

    value: Fraction | None
    sign: int


def _check_negsection(n, deg, r, s, d):
    if n < 3:
        raise ConstraintViolated(f"dimension must be at least 3, got {n}")
    if rat(deg) <= 0:
        raise ConstraintViolated("degree of O_Z(1) must be positive")
    if not 0 < s < r:
        raise ConstraintViolated(f"need 0 < s < r, got s={s}, r={r}")
    if d < 1:
        raise ConstraintViolated(f"need d >= 1, got {d}")
    if not r > d - s:
        raise ConstraintViolated(f"need r > d - s, got r={r}, d={d}, s={s}")


def eta_negsection_blowup(n: int, deg, r: int, s: int, d: int) -> SignedEta:
    """Negative section of ``P_Z(O + O(s))`` after blowing up ``W ⊂ E``.

    ``Z`` is an (n-1)-fold with ``-K_Z = O(r)``, ``deg = (O_Z(1)^(n-1))``
    and ``W ∈ |O_E(d)|`` on the positive section ``E``.  For ``d > s``::

        eta = deg / (n + 1) * (g1(s) - g1(d - s)),
        g1(x) = (r^(n+1) - (n x + r)(r - x)^n) / x^2

    which vanishes exactly at ``d = 2s`` and is negative for ``s < d < 2s``.
    For ``d <= s`` the volume function is convex with threshold 2, so only
    the sign (-1) is reported.
    """
    _check_negsection(n, deg, r, s, d)
    if d <= s:
        return SignedEta(None, -1)
    value = rat(deg) * (_g1(n, r, s) - _g1(n, r, d - s)) / (n + 1)
    return SignedEta(value, (value > 0) - (value < 0))


def negsection_blowup_sequence(n: int, deg, r: int, s: int, d: int) -> ModelSequence:
    """Two-segment model sequence behind :func:`eta_negsection_blowup` (``d > s``).

    ``E' ≅ Z`` throughout.  On ``[0, 1]`` its normal bundle is ``O(-s)``
    and ``-K|E' = O(r - s)``; after the elementary transformation on
    ``[1, 2]`` it sits in ``P_Z(O + O(d - s))`` with normal bundle
    ``O(d - s)`` and ``-K|E' = O(r + d - s)``.
    """
    _check_negsection(n, deg, r, s, d)
    if d <= s:
        raise ConstraintViolated("the two-segment model needs d > s")
    deg = rat(deg)
    sp = d - s
    p1 = RatPolynomial([r - s, s]) ** (n - 1) * deg
    p2 = RatPolynomial([r + sp, -sp]) ** (n - 1) * deg
    return ModelSequence.from_restricted_polys(n, [0, 1, 2], [p1, p2])


def eta_curve_blowup_3fold(H3, r: int, e: int, h: int, d: int, g: int, tau1, tau2) -> Fraction:
    """``eta(D) / 3`` for a threefold blown up along a smooth curve.

    ``X -> X2`` blows up a curve of degree ``d`` and genus ``g`` in a
    Picard-rank-one Fano threefold ``X2`` with ``-K = rH``, ``(H^3) = H3``;
    ``D + hF`` is the pullback of ``D2 ~ eH``.
    """
    H3, tau1, tau2 = rat(H3), rat(tau1), rat(tau2)
    if tau1 > tau2:
        raise InvalidInterval(f"tau1={tau1} exceeds tau2={tau2}")
    if e < 1 or h < 1:
        raise ConstraintViolated("e and h must be positive integers")
    one_minus_x = RatPolynomial([1, -1])
    main = RatPolynomial([r, -e]) ** 2 * one_minus_x * e
    lin = RatPolynomial([1, -h])
    corr = -(lin * RatPolynomial([h * r + e, h * (h * r - 3 * e)])) * d + lin**2 * ((2 * g - 2) * h)
    return H3 * integrate(main, 0, tau2) + integrate(one_minus_x * corr, 0, tau1)


def curve_blowup_sequence(H3, r: int, e: int, h: int, d: int, g: int, tau1, tau2) -> ModelSequence:
    """Model sequence from the restricted volumes of the same data.

    Past ``tau1`` the model is ``X2`` with ``p(x) = H3 e (r - e x)^2``;
    before it the curve contributes the correction term.
    """
    H3 = rat(H3)
    main = RatPolynomial([r, -e]) ** 2 * (H3 * e)
    lin = RatPolynomial([1, -h])
    corr = -(lin * RatPolynomial([h * r + e, h * (h * r - 3 * e)])) * d + lin**2 * ((2 * g - 2) * h)
    return ModelSequence.from_restricted_polys(3, [0, tau1, tau2], [main + corr, main])
