"""Exact rational scalars and small dense linear algebra over ``Fraction``.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  Vectors are plain tuples of fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]


def rat(value) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fmt(q) -> str:
    """Canonical ``"p/q"`` string, ``"p"`` when the denominator is 1."""
    q = rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> RatVector:
    return tuple(rat(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence, v: Sequence) -> RatVector:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> RatVector:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u: Sequence) -> RatVector:
    return tuple(c * a for a in u)


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    rows = [[rat(x) for x in r] for r in rows]
    return len(_echelon(rows)[1])


def solve(a: Sequence[Sequence], b: Sequence) -> RatVector | None:
    """Unique solution of the square system ``a x = b``, or None if singular."""
    n = len(a)
    aug = [[rat(x) for x in row] + [rat(bi)] for row, bi in zip(a, b)]
    m, piv = _echelon(aug)
    if piv != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[RatVector]:
    """Basis of ``{x : rows @ x = 0}``."""
    rows = [[rat(x) for x in r] for r in rows]
    m, piv = _echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(piv):
            x[pc] = -m[i][f]
        basis.append(tuple(x))
    return basis


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [[rat(x) for x in row] for row in a]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * result
