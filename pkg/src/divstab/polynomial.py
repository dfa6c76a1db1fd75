"""Univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, isqrt, lcm
from typing import Iterable, Sequence

from .errors import InvalidInterval
from .exact import rat


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [rat(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, init=False)
class RatPolynomial:
    """``coeffs[i]`` is the coefficient of ``x**i``; the zero polynomial has no coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c) -> "RatPolynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "RatPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = RatPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def antiderivative(self) -> "RatPolynomial":
        """Antiderivative vanishing at 0."""
        return RatPolynomial([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def compose_affine(self, a, b) -> "RatPolynomial":
        """``x -> self(a*x + b)``."""
        lin = RatPolynomial([b, a])
        out = RatPolynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def __repr__(self):
        return f"RatPolynomial([{', '.join(str(c) for c in self.coeffs)}])"


def _as_poly(p) -> RatPolynomial:
    return p if isinstance(p, RatPolynomial) else RatPolynomial([p])


def integrate(p: RatPolynomial, a, b) -> Fraction:
    """Exact definite integral of ``p`` over ``[a, b]``."""
    a, b = rat(a), rat(b)
    if a > b:
        raise InvalidInterval(f"lower bound {a} exceeds upper bound {b}")
    F = p.antiderivative()
    return F(b) - F(a)


def interpolate(xs: Sequence, ys: Sequence) -> RatPolynomial:
    """The unique polynomial of degree < len(xs) through the given points.

    Newton divided differences, expanded back to the monomial basis.
    """
    xs = [rat(x) for x in xs]
    ys = [rat(y) for y in ys]
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    a = list(ys)
    m = len(a)
    for k in range(1, m):
        for i in range(m - 1, k - 1, -1):
            a[i] = (a[i] - a[i - 1]) / (xs[i] - xs[i - k])
    out = RatPolynomial()
    for k in range(m - 1, -1, -1):
        out = out * RatPolynomial([-xs[k], 1]) + a[k]
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: RatPolynomial) -> list[Fraction]:
    """All distinct rational roots of a nonzero polynomial, sorted."""
    if p.degree < 0:
        raise ValueError("the zero polynomial has every number as a root")
    coeffs = list(p.coeffs)
    roots = set()
    # strip the factor x**k first
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return sorted(roots)
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = gcd(*ints)
    ints = [c // g for c in ints]
    q = RatPolynomial(ints)
    for num in _divisors(ints[0]):
        for dnm in _divisors(ints[-1]):
            for cand in (Fraction(num, dnm), Fraction(-num, dnm)):
                if cand not in roots and q(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def binomial_expansion(n: int, values: Sequence) -> RatPolynomial:
    """``sum_j C(n, j) (-x)^j values[j]`` for ``j = 0..n``.

    This is the expansion of ``(A - xB)^n`` given the mixed products
    ``values[j] = A^(n-j) B^j``.
    """
    if len(values) != n + 1:
        raise ValueError(f"expected {n + 1} values, got {len(values)}")
    return RatPolynomial(comb(n, j) * (-1) ** j * rat(v) for j, v in enumerate(values))
