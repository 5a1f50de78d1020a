"""Conformal maps, the Szego function and the endpoint coefficient sequences.

Branch conventions: all square roots and powers are principal unless noted.
``phi(z) = z + sqrt(z-1) sqrt(z+1)`` maps the slit plane onto the exterior of
the unit disk. The Szego function is written in terms of ``u = 1/phi``:

    D(z) = 2^{-(alpha+beta)/2} (1-u)^alpha (1+u)^beta exp(a_0/2 + 1/2 sum a_k u^k)

where ``a_k`` are the Chebyshev coefficients of ``log h``. Since ``|u| < 1``
both ``1 - u`` and ``1 + u`` stay in the right half plane, so principal powers
give the analytic branch with no special handling on ``(-inf, -1)``. On the
interval the same expression with ``u = exp(-+ i arccos x)`` gives the
boundary values ``D_+`` and ``D_-`` exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as nppoly

from .errors import BranchError, ContourError, DomainError, ParameterError
from .spectral import ChebSeries, EllipseContour, cheb_u_series, contour_integral
from .weight import WeightSpec, log_h_eval, sqrt_h_eval


def _as_complex(z):
    return np.asarray(z, dtype=complex)


def _on_interval(z, lo=-1.0, hi=1.0):
    return (z.imag == 0) & (z.real >= lo) & (z.real <= hi)


def _side_sign(side: str) -> int:
    if side in ("+", "plus", 1):
        return 1
    if side in ("-", "minus", -1):
        return -1
    raise ParameterError("side must be '+' or '-'")


def phi(z):
    """``z + (z^2-1)^{1/2}`` on the plane slit along [-1, 1]."""
    z = _as_complex(z)
    if np.any(_on_interval(z)):
        raise BranchError("phi is cut along [-1, 1]; use phi_boundary")
    return z + np.sqrt(z - 1) * np.sqrt(z + 1)


def phi_boundary(x, side: str = "+"):
    """``phi_+-(x) = exp(+- i arccos x)`` on (-1, 1)."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= 1):
        raise DomainError("boundary values live on the open interval")
    return np.exp(_side_sign(side) * 1j * np.arccos(x))


def phi_tilde(z):
    """``phi(-z) = -phi(z)``."""
    return -phi(z)


def sqrt_z2m1(z):
    """``(z^2 - 1)^{1/2}`` with the branch that behaves like ``z`` at infinity."""
    z = _as_complex(z)
    return np.sqrt(z - 1) * np.sqrt(z + 1)


def g_map(z):
    """``log phi(z)`` on ``C`` minus ``(-inf, 1]``."""
    z = _as_complex(z)
    if np.any((z.imag == 0) & (z.real <= 1)):
        raise BranchError("g is cut along (-inf, 1]")
    return np.log(phi(z))


def f_map(z):
    """``g(z)^2 / 4``, analytic near 1 and equal to ``-(arccos x)^2/4`` on (-1, 1]."""
    z = _as_complex(z)
    real_in = _on_interval(z, -1.0, 1.0)
    if np.any((z.imag == 0) & (z.real <= -1)):
        raise BranchError("f is cut along (-inf, -1]")
    out = np.empty(z.shape, dtype=complex)
    out[real_in] = -np.arccos(z.real[real_in]) ** 2 / 4
    rest = ~real_in
    if np.any(rest):
        out[rest] = np.log(phi(z[rest])) ** 2 / 4
    return out[()] if out.ndim == 0 else out


def g_tilde(z):
    """``log phi~(z)`` on ``C`` minus ``[-1, inf)``."""
    z = _as_complex(z)
    if np.any((z.imag == 0) & (z.real >= -1)):
        raise BranchError("g~ is cut along [-1, inf)")
    return np.log(phi_tilde(z))


def f_tilde(z):
    """``g~(z)^2 / 4``, equal to ``-(pi - arccos x)^2/4`` on [-1, 1)."""
    z = _as_complex(z)
    real_in = _on_interval(z, -1.0, 1.0)
    if np.any((z.imag == 0) & (z.real >= 1)):
        raise BranchError("f~ is cut along [1, inf)")
    out = np.empty(z.shape, dtype=complex)
    out[real_in] = -(np.pi - np.arccos(z.real[real_in])) ** 2 / 4
    rest = ~real_in
    if np.any(rest):
        out[rest] = np.log(phi_tilde(z[rest])) ** 2 / 4
    return out[()] if out.ndim == 0 else out


def endpoint_coefficients_contour(
    spec: WeightSpec, m: int = 32, contour: EllipseContour | None = None, endpoint: int = 1
) -> np.ndarray:
    """Coefficients ``c_n`` (endpoint +1) or ``d_n`` (endpoint -1), n < m,
    straight from their defining contour integral

        (1/2 pi i) oint log h(s) / ((s^2-1)^{1/2} (s -+ 1)^{n+1}) ds

    over a Bernstein ellipse inside the analyticity region of ``h``.

    The kernel has a pole of order ``n + 1`` close to the contour, so the
    trapezoid sum loses accuracy roughly like ``dist^{-n}``. Use it for the
    first few coefficients or as a cross-check; :func:`endpoint_coefficients`
    is the well-conditioned route.
    """
    if m < 1:
        raise ParameterError("need at least one coefficient")
    contour = contour or EllipseContour(1.3, 128)
    if contour.max_distance_to_interval() >= spec.margin:
        raise ContourError("contour leaves the analyticity region of h")
    zeta, _ = contour.points()
    if spec.h_kind == "positive_poly" and np.min(nppoly.polyval(zeta, spec.h_coeffs).real) <= 0:
        raise ContourError("Re h is not positive on the contour")
    ep = _endpoint(endpoint)
    powers = np.arange(m)

    def integrand(s):
        base = log_h_eval(spec, s) / sqrt_z2m1(s)
        return base[:, None] / (s[:, None] - ep) ** (powers[None, :] + 1)

    return contour_integral(integrand, contour)


def _endpoint(endpoint) -> float:
    ep = float(endpoint)
    if ep not in (1.0, -1.0):
        raise ParameterError("endpoint must be +1 or -1")
    return ep


def endpoint_function(spec: WeightSpec, log_h: ChebSeries, z):
    """``G(z) = (log h(z) - sum_k a_k phi(z)^{-k}) / (z^2-1)^{1/2}``.

    This is the Cauchy integral whose Taylor coefficients at +1 and -1 are
    ``c_n`` and ``d_n``. It is analytic across (-1, 1), so either boundary
    value may be used there.
    """
    z = _as_complex(z)
    on = _on_interval(z)
    zz = np.where(on, z + 1e-300j, z)
    u = 1.0 / phi(zz)
    return (log_h_eval(spec, zz) - nppoly.polyval(u, log_h.coeffs)) / sqrt_z2m1(zz)


def endpoint_coefficients(
    spec: WeightSpec, m: int = 32, endpoint: int = 1, radius: float | None = None,
    log_h: ChebSeries | None = None,
) -> np.ndarray:
    """Coefficients ``c_n`` or ``d_n`` for n < m as Taylor coefficients of
    :func:`endpoint_function`, sampled on a circle around the endpoint.

    The circle radius defaults to ``0.9 * margin`` (shrunk for polynomial
    ``h`` until ``Re h > 0`` on it), so coefficient ``n`` carries an absolute
    error of about ``eps / radius^n``. Partial sums at distance below the
    radius are accurate to near machine precision.
    """
    if m < 1:
        raise ParameterError("need at least one coefficient")
    ep = _endpoint(endpoint)
    log_h = spec.log_h if log_h is None else log_h
    r0 = min(0.9 * spec.margin, 1.0) if radius is None else float(radius)
    M = max(64, 2 * m)
    t = 2 * np.pi * (np.arange(M) + 0.5) / M
    while True:
        z = ep + r0 * np.exp(1j * t)
        if spec.h_kind != "positive_poly" or np.min(nppoly.polyval(z, spec.h_coeffs).real) > 0:
            break
        if radius is not None:
            raise ContourError("Re h is not positive on the sampling circle")
        r0 *= 0.5
    vals = endpoint_function(spec, log_h, z)
    coef = np.fft.fft(vals) / M
    n = np.arange(M)
    # undo the half-step shift of the sample angles
    coef = coef * np.exp(-1j * np.pi * n / M) / r0**n
    return coef[:m]


@dataclass(frozen=True)
class SzegoData:
    """Everything about a weight that the asymptotic formulas need."""

    spec: WeightSpec
    log_h: ChebSeries
    D_inf: float
    c: np.ndarray
    d: np.ndarray

    @property
    def alpha(self) -> float:
        return self.spec.alpha

    @property
    def beta(self) -> float:
        return self.spec.beta

    @property
    def c0(self) -> float:
        return float(self.c[0].real)

    @property
    def d0(self) -> float:
        return float(self.d[0].real)


def szego_data(spec: WeightSpec, m: int = 32, contour: EllipseContour | None = None) -> SzegoData:
    log_h = spec.log_h
    D_inf = 2.0 ** (-(spec.alpha + spec.beta) / 2) * math.exp(log_h.coeffs[0] / 2)
    if contour is None:
        c = endpoint_coefficients(spec, m, 1, log_h=log_h)
        d = endpoint_coefficients(spec, m, -1, log_h=log_h)
    else:
        c = endpoint_coefficients_contour(spec, m, contour, 1)
        d = endpoint_coefficients_contour(spec, m, contour, -1)
    for arr in (c, d):
        arr.setflags(write=False)
    return SzegoData(spec, log_h, D_inf, c, d)


def _d_from_u(data: SzegoData, u):
    a = data.log_h.coeffs
    al, be = data.alpha, data.beta
    series = nppoly.polyval(u, a[1:]) * u if len(a) > 1 else 0.0
    return (
        2.0 ** (-(al + be) / 2)
        * (1 - u) ** al
        * (1 + u) ** be
        * np.exp(a[0] / 2 + 0.5 * series)
    )


def szego_D(data: SzegoData, z):
    """Szego function ``D(z)`` off [-1, 1]."""
    return _d_from_u(data, 1.0 / phi(z))


def szego_D_boundary(data: SzegoData, x, side: str = "+"):
    """Boundary value ``D_+(x)`` or ``D_-(x)`` on (-1, 1), evaluated exactly."""
    return _d_from_u(data, 1.0 / phi_boundary(x, side))


def szego_D_offset(data: SzegoData, x, side: str = "+", eps: float = 1e-8):
    """Boundary value by evaluation at ``x +- i eps`` and ``x +- 2 i eps``
    followed by one Richardson step. Kept as an independent check on
    :func:`szego_D_boundary`."""
    s = _side_sign(side)
    x = np.asarray(x, dtype=float)
    d1 = szego_D(data, x + s * 1j * eps)
    d2 = szego_D(data, x + s * 2j * eps)
    return 2 * d1 - d2


def psi_phase(data: SzegoData, x):
    """Phase ``psi(x)`` with ``D_+(x) = sqrt(w(x)) exp(-i psi(x))``.

    The Jacobi part is ``(alpha (theta - pi) + beta theta) / 2`` with
    ``theta = arccos x``. The principal-value part reduces to
    ``(sqrt(1-x^2) / 2) sum_{k>=1} a_k U_{k-1}(x)``.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= 1):
        raise DomainError("psi is defined on the open interval")
    theta = np.arccos(x)
    a = data.log_h.coeffs
    pv = 0.5 * np.sqrt(1 - x * x) * cheb_u_series(a[1:], x) if len(a) > 1 else 0.0
    return 0.5 * (data.alpha * (theta - np.pi) + data.beta * theta) + pv


def zeta_phases(data: SzegoData, x):
    """``zeta_{1,2} = +-theta/2 + psi + alpha pi / 2``."""
    theta = np.arccos(np.asarray(x, dtype=float))
    base = psi_phase(data, x) + data.alpha * np.pi / 2
    return base + theta / 2, base - theta / 2


def W_map(spec: WeightSpec, z, side: str | None = None):
    """``((z-1)^alpha (z+1)^beta h(z))^{1/2}``, positive on (1, inf).

    Analytic off ``(-inf, 1]``. On (-1, 1) pass ``side`` to get ``W_+`` or
    ``W_-``.
    """
    al, be = spec.alpha, spec.beta
    if side is not None:
        x = np.asarray(z, dtype=float)
        if np.any(np.abs(x) >= 1):
            raise DomainError("boundary values live on the open interval")
        s = _side_sign(side)
        return (
            (1 - x) ** (al / 2) * np.exp(s * 0.5j * np.pi * al)
            * (1 + x) ** (be / 2) * sqrt_h_eval(spec, x)
        )
    z = _as_complex(z)
    if np.any((z.imag == 0) & (z.real <= 1)):
        raise BranchError("W is cut along (-inf, 1]")
    return (z - 1) ** (al / 2) * (z + 1) ** (be / 2) * sqrt_h_eval(spec, z)


def W_tilde(spec: WeightSpec, z, side: str | None = None):
    """``((1-z)^alpha (-1-z)^beta h(z))^{1/2}``, positive on (-inf, -1).

    Analytic off ``[-1, inf)``.
    """
    al, be = spec.alpha, spec.beta
    if side is not None:
        x = np.asarray(z, dtype=float)
        if np.any(np.abs(x) >= 1):
            raise DomainError("boundary values live on the open interval")
        # -1 - z = (1 + x) e^{-+ i pi} when approached from above / below
        s = _side_sign(side)
        return (
            (1 - x) ** (al / 2)
            * (1 + x) ** (be / 2) * np.exp(-s * 0.5j * np.pi * be)
            * sqrt_h_eval(spec, x)
        )
    z = _as_complex(z)
    if np.any((z.imag == 0) & (z.real >= -1)):
        raise BranchError("W~ is cut along [-1, inf)")
    return (1 - z) ** (al / 2) * (-1 - z) ** (be / 2) * sqrt_h_eval(spec, z)


def wd_expansion(data: SzegoData, z, endpoint: int = 1):
    """Series form of ``(W/D)^2`` near +1 or ``(W~/D)^2`` near -1.

    ``phi^{alpha+beta} exp((z^2-1)^{1/2} sum c_n (z-1)^n)`` at +1 and
    ``phi~^{alpha+beta} exp((z^2-1)^{1/2} sum d_n (z+1)^n)`` at -1.
    """
    z = _as_complex(z)
    s = data.alpha + data.beta
    if endpoint == 1:
        return phi(z) ** s * np.exp(sqrt_z2m1(z) * nppoly.polyval(z - 1, data.c))
    if endpoint == -1:
        return phi_tilde(z) ** s * np.exp(sqrt_z2m1(z) * nppoly.polyval(z + 1, data.d))
    raise ParameterError("endpoint must be +1 or -1")
