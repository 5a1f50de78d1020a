"""Bessel functions of real order for real positive arguments.

Only what the endpoint analysis needs: ``J``, ``Y`` (non-integer order),
``I``, ``K``, their derivatives, the Hankel functions and the positive zeros
of ``J``.

Regimes for ``J``: ascending series for small arguments, Miller's backward
recurrence in the middle and the Hankel asymptotic expansion for large ones.
``K`` uses the integral ``int_0^inf exp(-x cosh t) cosh(nu t) dt``, whose
trapezoid sum converges geometrically for every order.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, NumericalError, OrderError

SERIES_MAX = 5.0
HANKEL_MIN = 25.0
I_ASYMPTOTIC_MIN = 60.0


def _rgamma(x: float) -> float:
    """Reciprocal gamma, zero at the poles."""
    if x <= 0 and x == math.floor(x):
        return 0.0
    return 1.0 / math.gamma(x)


def _vectorize(fn):
    def wrapper(nu, x):
        xa = np.asarray(x, dtype=float)
        if xa.ndim == 0:
            return fn(float(nu), float(xa))
        return np.array([fn(float(nu), float(v)) for v in xa.ravel()]).reshape(xa.shape)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _j_series(nu: float, x: float) -> float:
    q = -0.25 * x * x
    term = _rgamma(nu + 1.0)
    # start past the pole when nu is a negative non-integer below -1
    total = term
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + nu)) if (k + nu) != 0 else 0.0
        total += term
        if abs(term) < 1e-17 * abs(total) and k > 2:
            break
        if k > 500:
            raise NumericalError("J series did not converge")
    return total * (0.5 * x) ** nu


def _hankel_pq(nu: float, x: float):
    """Asymptotic P, Q sums, optimally truncated."""
    mu = 4.0 * nu * nu
    P, Q = 1.0, 0.0
    term = 1.0
    k = 0
    prev = math.inf
    while k < 200:
        k += 1
        term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) >= prev or abs(term) < 1e-17:
            break
        prev = abs(term)
        # terms alternate between Q (odd k) and P (even k) with sign (-1)^{floor(k/2)}
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            Q += sign * term
        else:
            P += sign * term
    return P, Q


def _j_hankel(nu: float, x: float) -> float:
    P, Q = _hankel_pq(nu, x)
    chi = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (P * math.cos(chi) - Q * math.sin(chi))


def _y_hankel(nu: float, x: float) -> float:
    P, Q = _hankel_pq(nu, x)
    chi = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (P * math.sin(chi) + Q * math.cos(chi))


def _j_miller(nu: float, x: float) -> float:
    """Backward recurrence normalised by sum_k (nu+2k) G(nu+k)/k! J_{nu+2k} = (x/2)^nu."""
    if nu <= -1:
        raise OrderError("Miller recurrence needs order above -1")
    top = int(x + 40 + 4 * math.sqrt(x))
    if top % 2:
        top += 1
    jp1, j = 0.0, 1e-300
    vals = [0.0] * (top + 1)
    vals[top] = j
    for k in range(top, 0, -1):
        jm1 = 2.0 * (nu + k) / x * j - jp1
        jp1, j = j, jm1
        vals[k - 1] = j
        if abs(j) > 1e250:
            vals = [v * 1e-250 for v in vals]
            j *= 1e-250
            jp1 *= 1e-250
    # normalisation sum, coefficients c_0 = Gamma(nu+1), c_k = (nu+2k) Gamma(nu+k)/k!
    coef = math.gamma(nu + 1.0)
    s = coef * vals[0]
    ratio = math.gamma(nu + 1.0)  # Gamma(nu+k)/k! at k=1
    for k in range(1, top // 2 + 1):
        if k > 1:
            ratio *= (nu + k - 1) / k
        s += (nu + 2 * k) * ratio * vals[2 * k]
    return vals[0] * (0.5 * x) ** nu / s


def _besselj(nu: float, x: float) -> float:
    if x < 0:
        raise DomainError("argument must be non-negative")
    if x == 0.0:
        if nu == 0:
            return 1.0
        return 0.0 if nu > 0 else math.inf
    if x <= SERIES_MAX:
        return _j_series(nu, x)
    if x <= HANKEL_MIN:
        return _j_miller(nu, x)
    return _j_hankel(nu, x)


def _check_order(nu: float):
    if not math.isfinite(nu) or nu <= -1:
        raise OrderError("order must be finite and exceed -1")


def besselj(nu, x):
    """``J_nu(x)`` for ``nu > -1`` and ``x >= 0``."""
    _check_order(float(nu))
    return _vectorize(_besselj)(nu, x)


def besselj_prime(nu, x):
    """``J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x)``."""
    _check_order(float(nu))
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("derivative needs a positive argument")
    return nu / x * besselj(nu, x) - besselj(nu + 1.0, x)


def _is_integer(nu: float) -> bool:
    return nu == math.floor(nu)


def _bessely(nu: float, x: float) -> float:
    if x <= 0:
        raise DomainError("Y needs a positive argument")
    if x > HANKEL_MIN:
        return _y_hankel(nu, x)
    s, c = math.sin(nu * math.pi), math.cos(nu * math.pi)
    jm = _j_series(-nu, x) if x <= SERIES_MAX else _j_miller(-nu, x)
    return (_besselj(nu, x) * c - jm) / s


def bessely(nu, x):
    """``Y_nu(x)`` for non-integer ``nu`` in (-1, 1) and ``x > 0``."""
    nu = float(nu)
    if not -1 < nu < 1 or _is_integer(nu):
        raise OrderError("Y is only provided for non-integer order in (-1, 1)")
    return _vectorize(_bessely)(nu, x)


def bessely_prime(nu, x):
    """``Y'_nu`` from the derivative of the J combination."""
    nu = float(nu)
    if not -1 < nu < 1 or _is_integer(nu):
        raise OrderError("Y is only provided for non-integer order in (-1, 1)")
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("derivative needs a positive argument")
    s, c = math.sin(nu * math.pi), math.cos(nu * math.pi)
    jp = nu / x * besselj(nu, x) - besselj(nu + 1.0, x)
    jmp = -nu / x * besselj(-nu, x) - besselj(1.0 - nu, x)
    return (jp * c - jmp) / s


def hankel1(nu, x):
    return besselj(nu, x) + 1j * bessely(nu, x)


def hankel2(nu, x):
    return besselj(nu, x) - 1j * bessely(nu, x)


def hankel1_prime(nu, x):
    return besselj_prime(nu, x) + 1j * bessely_prime(nu, x)


def hankel2_prime(nu, x):
    return besselj_prime(nu, x) - 1j * bessely_prime(nu, x)


def _i_series(nu: float, x: float) -> float:
    q = 0.25 * x * x
    term = _rgamma(nu + 1.0)
    total = term
    k = 0
    while True:
        k += 1
        term *= q / (k * (k + nu))
        total += term
        if abs(term) < 1e-17 * abs(total) and k > 2:
            break
        if k > 1000:
            raise NumericalError("I series did not converge")
    return total * (0.5 * x) ** nu


def _i_asymptotic_scaled(nu: float, x: float) -> float:
    """``exp(-x) I_nu(x)`` for large x."""
    mu = 4.0 * nu * nu
    total, term, prev = 1.0, 1.0, math.inf
    for k in range(1, 200):
        term *= -(mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
        if abs(term) >= prev or abs(term) < 1e-17:
            break
        prev = abs(term)
        total += term
    return total / math.sqrt(2.0 * math.pi * x)


def _besseli_scaled(nu: float, x: float) -> float:
    if x < 0:
        raise DomainError("argument must be non-negative")
    if x == 0.0:
        if nu == 0:
            return 1.0
        return 0.0 if nu > 0 else math.inf
    if x < I_ASYMPTOTIC_MIN:
        return _i_series(nu, x) * math.exp(-x)
    return _i_asymptotic_scaled(nu, x)


def besseli(nu, x, scaled: bool = False):
    """``I_nu(x)``; with ``scaled`` returns ``exp(-x) I_nu(x)``."""
    _check_order(float(nu))
    out = _vectorize(_besseli_scaled)(nu, x)
    return out if scaled else out * np.exp(np.asarray(x, dtype=float))


def besseli_prime(nu, x, scaled: bool = False):
    """``I'_nu(x) = I_{nu+1}(x) + (nu/x) I_nu(x)``."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("derivative needs a positive argument")
    return besseli(nu + 1.0, x, scaled) + nu / x * besseli(nu, x, scaled)


_K_STEP = 0.02


def _k_integral_scaled(nu: float, x: float, derivative: bool = False) -> float:
    if x <= 0:
        raise DomainError("K needs a positive argument")
    # integrand exp(-x (cosh t - 1)) cosh(nu t); stop once it is below 1e-20
    tmax = math.acosh(1.0 + (46.0 + abs(nu) * 30.0) / x) + 1.0
    t = np.arange(0.0, tmax + _K_STEP, _K_STEP)
    f = np.exp(-x * (np.cosh(t) - 1.0)) * np.cosh(nu * t)
    if derivative:
        f = -f * np.cosh(t)
    f[0] *= 0.5
    return float(_K_STEP * np.sum(f))


def besselk(nu, x, scaled: bool = False):
    """``K_nu(x)`` for any real order; ``scaled`` returns ``exp(x) K_nu(x)``."""
    if not math.isfinite(float(nu)):
        raise OrderError("order must be finite")
    out = _vectorize(_k_integral_scaled)(nu, x)
    return out if scaled else out * np.exp(-np.asarray(x, dtype=float))


def besselk_prime(nu, x, scaled: bool = False):
    """``K'_nu(x) = -int cosh t exp(-x cosh t) cosh(nu t) dt``."""
    if not math.isfinite(float(nu)):
        raise OrderError("order must be finite")
    out = _vectorize(lambda n, v: _k_integral_scaled(n, v, True))(nu, x)
    return out if scaled else out * np.exp(-np.asarray(x, dtype=float))


def _mcmahon(nu: float, k: int) -> float:
    b = (k + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    return b - (mu - 1) / (8 * b) - 4 * (mu - 1) * (7 * mu - 31) / (3 * (8 * b) ** 3)


def bessel_zero(nu: float, k: int) -> float:
    """k-th positive zero ``j_{nu,k}`` of ``J_nu`` (k >= 1).

    McMahon's expansion gives the start; Newton refines it. If Newton strays
    the zero is re-bracketed from the neighbouring McMahon guesses and
    bisected.
    """
    _check_order(float(nu))
    if k < 1:
        raise DomainError("zero index starts at 1")
    x = max(_mcmahon(nu, k), 1e-3)
    lo = max(_mcmahon(nu, k) - 0.5 * math.pi, 1e-6) if k > 1 else 1e-6
    hi = _mcmahon(nu, k) + 0.5 * math.pi
    for _ in range(60):
        j = _besselj(nu, x)
        jp = nu / x * j - _besselj(nu + 1.0, x)
        step = j / jp
        x -= step
        if not lo < x < hi:
            break
        if abs(step) < 1e-15 * x:
            return x
    return _bisect_zero(nu, lo, hi)


def _bisect_zero(nu: float, lo: float, hi: float) -> float:
    flo = _besselj(nu, lo)
    if flo * _besselj(nu, hi) > 0:
        raise NumericalError("could not bracket Bessel zero")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = _besselj(nu, mid)
        if fm == 0 or hi - lo < 1e-15 * mid:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
