"""Chebyshev series and trapezoid quadrature on Bernstein ellipses.

Series are stored in the plain convention ``f(x) = sum_k a_k T_k(x)``, so
``a_0`` is the full constant term (no halving).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ContourError, DomainError, NumericalError, ParameterError


@dataclass(frozen=True)
class ChebSeries:
    """Chebyshev coefficients together with a crude truncation estimate."""

    coeffs: np.ndarray
    tail_bound: float

    def __call__(self, x):
        return clenshaw(self.coeffs, x)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def lobatto_points(m: int) -> np.ndarray:
    """Chebyshev extreme points ``cos(j pi / m)``, j = 0..m."""
    return np.cos(np.pi * np.arange(m + 1) / m)


def _tail_bound(coeffs: np.ndarray) -> float:
    m = len(coeffs) - 1
    last = max(2, m // 4)
    return float(2.0 * np.max(np.abs(coeffs[-last:])))


def cheb_transform(f: Callable, m: int) -> ChebSeries:
    """Interpolate ``f`` at the m+1 Lobatto points.

    Parameters
    ----------
    f : callable
        Vectorised function on [-1, 1].
    m : int
        Degree of the interpolant, at least 2.

    Returns
    -------
    ChebSeries
        Coefficients ``a_0..a_m`` and ``tail_bound``, twice the largest
        magnitude among the last ``max(2, m // 4)`` coefficients.
    """
    if m < 2:
        raise ParameterError("degree must be at least 2")
    x = lobatto_points(m)
    vals = np.asarray(f(x), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise DomainError("non-finite sample while building Chebyshev series")
    # direct cosine sum, O(m^2) but m stays small here
    j = np.arange(m + 1)
    cosmat = np.cos(np.pi * np.outer(j, j) / m)
    w = np.ones(m + 1)
    w[0] = w[-1] = 0.5
    coeffs = (2.0 / m) * cosmat @ (w * vals)
    coeffs[0] *= 0.5
    coeffs[-1] *= 0.5
    return ChebSeries(coeffs, _tail_bound(coeffs))


def clenshaw(coeffs, x):
    """Evaluate ``sum_k c_k T_k(x)`` by Clenshaw's recurrence.

    ``x`` may be real or complex, scalar or array.
    """
    c = np.asarray(coeffs)
    x = np.asarray(x)
    b1 = np.zeros_like(x, dtype=np.result_type(x, c, float))
    b2 = np.zeros_like(b1)
    for ck in c[:0:-1]:
        b1, b2 = 2.0 * x * b1 - b2 + ck, b1
    out = x * b1 - b2 + c[0]
    if out.ndim == 0:
        return out[()]
    return out


def cheb_u(k: int, x):
    """Second-kind Chebyshev polynomial ``U_k(x)`` by three-term recurrence."""
    x = np.asarray(x)
    if k < 0:
        return np.zeros_like(x, dtype=float)
    u0 = np.ones_like(x, dtype=np.result_type(x, float))
    if k == 0:
        return u0
    u1 = 2.0 * x
    for _ in range(k - 1):
        u0, u1 = u1, 2.0 * x * u1 - u0
    return u1


def cheb_u_series(coeffs, x):
    """Evaluate ``sum_k c_k U_k(x)`` by Clenshaw's recurrence."""
    c = np.asarray(coeffs)
    x = np.asarray(x)
    b1 = np.zeros_like(x, dtype=np.result_type(x, c, float))
    b2 = np.zeros_like(b1)
    for ck in c[::-1]:
        b1, b2 = 2.0 * x * b1 - b2 + ck, b1
    return b1


@dataclass(frozen=True)
class EllipseContour:
    """Bernstein ellipse ``(rho e^{it} + rho^{-1} e^{-it}) / 2`` with trapezoid nodes."""

    rho: float = 1.3
    nodes: int = 128

    def __post_init__(self):
        if not self.rho > 1.0:
            raise ContourError("ellipse parameter rho must exceed 1")
        if self.nodes < 16 or self.nodes % 2:
            raise ContourError("node count must be even and at least 16")

    @property
    def semi_major(self) -> float:
        return 0.5 * (self.rho + 1.0 / self.rho)

    @property
    def semi_minor(self) -> float:
        return 0.5 * (self.rho - 1.0 / self.rho)

    def points(self):
        """Return nodes ``zeta_j`` and derivatives ``d zeta / dt`` at them."""
        t = 2.0 * np.pi * np.arange(self.nodes) / self.nodes
        e = np.exp(1j * t)
        zeta = 0.5 * (self.rho * e + 1.0 / (self.rho * e))
        dzeta = 0.5j * (self.rho * e - 1.0 / (self.rho * e))
        return zeta, dzeta

    def max_distance_to_interval(self) -> float:
        """Largest distance from a point of the ellipse to [-1, 1]."""
        zeta, _ = self.points()
        dx = np.maximum(np.abs(zeta.real) - 1.0, 0.0)
        return float(np.max(np.hypot(dx, zeta.imag)))


def contour_integral(F: Callable, contour: EllipseContour = EllipseContour()):
    """Trapezoid approximation of ``(1 / 2 pi i) * oint F(zeta) d zeta``.

    ``F`` is called once with the array of nodes. Raises ContourError if it
    returns anything non-finite.
    """
    zeta, dzeta = contour.points()
    vals = np.asarray(F(zeta))
    if not np.all(np.isfinite(vals)):
        raise ContourError("integrand is singular or non-finite on the contour")
    total = np.tensordot(dzeta, vals, axes=(0, 0)) if vals.ndim > 1 else np.dot(vals, dzeta)
    out = total / (1j * contour.nodes)
    if not np.all(np.isfinite(out)):
        raise NumericalError("contour sum overflowed")
    return out
