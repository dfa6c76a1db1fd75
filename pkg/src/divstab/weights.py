"""Section counting on toric Fanos: a volume-free route to eta and DF.

``h^0(-kK_X)`` is the number of lattice points of ``kP`` and
``h^0(-krK_X - jD_v) = #{u in krP : <u, v> >= -kr + j}``.  Summing over
``j`` gives

    f(k) = sum_{u in krP} (<u, v> + kr)
    w(k) = -kr tau h^0(-krK_X) + f(k)

Both are polynomials in ``k`` of degree ``n + 1`` along a suitable
arithmetic progression; their top coefficients give eta and DF.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor, ceil, lcm, gcd

import numpy as np

from .errors import FitMismatch
from .exact import rat
from .polynomial import RatPolynomial, interpolate
from .toric import ToricFano, pseudoeffective_threshold


def _lattice_points(X: ToricFano, scale: int) -> np.ndarray:
    """Integer points of ``scale * P``, one per row."""
    P = X.polytope
    lo = [floor(scale * min(v[i] for v in P.vertices)) for i in range(X.dim)]
    hi = [ceil(scale * max(v[i] for v in P.vertices)) for i in range(X.dim)]
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, X.dim)
    rays = np.array(X.rays, dtype=np.int64)
    keep = np.all(grid @ rays.T >= -scale, axis=1)
    return grid[keep]


def section_count(X: ToricFano, k: int) -> int:
    """``h^0(X, -kK_X) = #(kP ∩ Z^n)``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    return int(len(_lattice_points(X, k)))


def graded_section_count(X: ToricFano, ray: int, r: int, k: int, j: int) -> int:
    """``h^0(X, -krK_X - jD)`` for the divisor of ``ray``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    pts = _lattice_points(X, k * r)
    v = np.array(X.rays[ray], dtype=np.int64)
    return int(np.count_nonzero(pts @ v >= -k * r + j))


def _f_value(X: ToricFano, ray: int, kr: int) -> tuple[int, int]:
    pts = _lattice_points(X, kr)
    v = np.array(X.rays[ray], dtype=np.int64)
    heights = pts @ v + kr
    return int(heights.sum()), int(len(pts))


def lattice_index(X: ToricFano) -> int:
    """Smallest ``L`` with ``L * P`` a lattice polytope."""
    return lcm(*(c.denominator for v in X.polytope.vertices for c in v))


def default_step(X: ToricFano, ray: int, r: int) -> int:
    """Smallest ``k0`` with ``k0 r P`` lattice and ``k0 r tau`` integral."""
    tau = pseudoeffective_threshold(X, ray)
    m = lcm(lattice_index(X), tau.denominator)
    return m // gcd(m, r)


@dataclass(frozen=True)
class WeightSeries:
    n: int
    r: int
    tau: Fraction
    ks: tuple[int, ...]
    h0_values: tuple[int, ...]
    f_values: tuple[int, ...]
    w_values: tuple[int, ...]
    fitted_f: RatPolynomial | None
    fitted_w: RatPolynomial | None

    @property
    def fitted(self) -> bool:
        return self.fitted_f is not None and self.fitted_w is not None


def _fit(ks, values, degree):
    """Interpolate on the first ``degree + 1`` samples, verify on the rest."""
    poly = interpolate(ks[: degree + 1], values[: degree + 1])
    if all(poly(k) == v for k, v in zip(ks, values)):
        return poly
    return None


def weight_series(X: ToricFano, ray: int, r: int = 1, ks=None, kmax: int | None = None) -> WeightSeries:
    """Sample ``f(k)`` and ``w(k)`` and fit exact polynomials of degree ``n + 1``.

    By default ``ks = k0, 2 k0, ..., (n + 3) k0`` (or up to ``kmax``),
    where ``k0`` is :func:`default_step`.  If the samples are not
    reproduced by one polynomial the series comes back unfitted.
    """
    n = X.dim
    if r < 1:
        raise ValueError("r must be a positive integer")
    tau = pseudoeffective_threshold(X, ray)
    k0 = default_step(X, ray, r)
    if ks is None:
        count = n + 3
        if kmax is not None:
            count = max(count, kmax // k0)
        ks = [k0 * i for i in range(1, count + 1)]
    ks = tuple(int(k) for k in ks)
    if len(ks) < n + 3:
        raise ValueError(f"need at least {n + 3} samples to fit and verify, got {len(ks)}")
    if len(set(ks)) != len(ks) or min(ks) < 1:
        raise ValueError("sample multipliers must be distinct positive integers")
    for k in ks:
        if (k * r * tau).denominator != 1:
            raise ValueError(f"k*r*tau is not integral for k={k}; use multiples of {k0}")
    f_vals, h0_vals, w_vals = [], [], []
    for k in ks:
        f, h0 = _f_value(X, ray, k * r)
        f_vals.append(f)
        h0_vals.append(h0)
        w_vals.append(int(-k * r * tau * h0) + f)
    fitted_f = _fit(ks, f_vals, n + 1)
    fitted_w = _fit(ks, w_vals, n + 1)
    return WeightSeries(n, r, tau, ks, tuple(h0_vals), tuple(f_vals), tuple(w_vals), fitted_f, fitted_w)


def _require_fitted(series: WeightSeries) -> None:
    if not series.fitted:
        step = series.ks[1] - series.ks[0] if len(series.ks) > 1 else 1
        raise FitMismatch(
            "sampled values are not reproduced by a polynomial of degree n + 1; "
            f"retry with step {2 * step}",
            suggested_k0=2 * step,
        )


def eta_from_weights(series: WeightSeries, n: int | None = None) -> Fraction:
    """``eta = n! / r^(n+1) * (n f_{n+1} - 2 r f_n)``."""
    _require_fitted(series)
    n = series.n if n is None else n
    f = series.fitted_f
    r = series.r
    return Fraction(factorial(n), r ** (n + 1)) * (n * f.coeff(n + 1) - 2 * r * f.coeff(n))


def df_from_weights(series: WeightSeries, n: int | None, Kn) -> Fraction:
    """``DF = ((-rK)^n / n!) * (n / (2r) w_{n+1} - w_n)``."""
    _require_fitted(series)
    n = series.n if n is None else n
    w = series.fitted_w
    r = series.r
    rKn = Fraction(r) ** n * rat(Kn)
    return rKn / factorial(n) * (Fraction(n, 2 * r) * w.coeff(n + 1) - w.coeff(n))
