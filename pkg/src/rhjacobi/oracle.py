"""Reference values for orthogonal polynomials of a modified Jacobi weight.

Everything here is computed directly from the weight: Gauss-Jacobi nodes by
Golub-Welsch, then a discretised Stieltjes procedure with ``h`` folded into
the quadrature weights. No asymptotic formula is used, so these numbers can
serve as ground truth for the expansions in :mod:`rhjacobi.asymptotics`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NumericalError, ParameterError
from .weight import WeightSpec, h_eval, jacobi_moment

_EPS = np.finfo(float).eps


def tridiag_eig(diag, offdiag, first_row: bool = False):
    """Eigen-decomposition of a symmetric tridiagonal matrix by implicit QL.

    Uses Wilkinson shifts and deflation on negligible off-diagonals. Only the
    first row of the eigenvector matrix is accumulated, which is all that
    Golub-Welsch needs.

    Parameters
    ----------
    diag : array_like, shape (n,)
    offdiag : array_like, shape (n-1,)
    first_row : bool
        Also return the first component of each normalised eigenvector.

    Returns
    -------
    eigenvalues sorted ascending, and optionally the matching first components.
    """
    d = [float(v) for v in diag]
    n = len(d)
    e = [float(v) for v in offdiag] + [0.0]
    if len(e) != n:
        raise ParameterError("off-diagonal must have length n - 1")
    z = [0.0] * n
    if n:
        z[0] = 1.0
    budget = 50 * max(n, 1)
    used = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            used += 1
            if used > budget:
                raise NumericalError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    order = np.argsort(d)
    vals = np.asarray(d)[order]
    if first_row:
        return vals, np.asarray(z)[order]
    return vals


def jacobi_recurrence(n: int, alpha: float, beta: float):
    """Monic recurrence coefficients of the pure Jacobi weight.

    Returns ``b_0..b_{n-1}`` and ``a_1..a_{n-1}`` (not squared).
    """
    k = np.arange(n, dtype=float)
    s = alpha + beta
    b = np.empty(n)
    b[0] = (beta - alpha) / (s + 2.0)
    kk = k[1:]
    b[1:] = (beta**2 - alpha**2) / ((2 * kk + s) * (2 * kk + s + 2))
    a2 = np.empty(max(n - 1, 0))
    if n > 1:
        a2[0] = 4 * (alpha + 1) * (beta + 1) / ((s + 2) ** 2 * (s + 3))
        kk = k[2:]
        a2[1:] = (
            4 * kk * (kk + alpha) * (kk + beta) * (kk + s)
            / ((2 * kk + s) ** 2 * (2 * kk + s + 1) * (2 * kk + s - 1))
        )
    return b, np.sqrt(a2)


@lru_cache(maxsize=64)
def gauss_jacobi(n: int, alpha: float, beta: float):
    """Nodes (ascending) and weights of the n-point Gauss-Jacobi rule."""
    if n < 1:
        raise ParameterError("need at least one node")
    if alpha <= -1 or beta <= -1:
        raise ParameterError("exponents must exceed -1")
    b, a = jacobi_recurrence(n, alpha, beta)
    x, v = tridiag_eig(b, a, first_row=True)
    wts = jacobi_moment(alpha, beta) * v**2
    x.setflags(write=False)
    wts.setflags(write=False)
    return x, wts


@dataclass(frozen=True)
class RecurrenceTable:
    """Recurrence data of the orthonormal polynomials up to degree ``N``.

    ``a[n]`` is ``a_n`` for n = 1..N with ``a[0] = 0`` by convention,
    ``b[n]`` is ``b_n`` for n = 0..N and ``log_gamma[n]`` is
    ``log gamma_n`` for n = 0..N.
    """

    N: int
    a: np.ndarray
    b: np.ndarray
    log_gamma: np.ndarray
    log_mu0: float


def stieltjes(spec: WeightSpec, N: int, nquad: int | None = None) -> RecurrenceTable:
    """Discretised Stieltjes procedure on a Gauss-Jacobi rule.

    The default rule has ``2N + 32`` points so that every inner product is
    integrated exactly when ``h`` is a polynomial and to near machine
    precision otherwise.
    """
    if N < 1:
        raise ParameterError("table size must be at least 1")
    nq = 2 * N + 32 if nquad is None else nquad
    if nq <= N + 1:
        raise ParameterError("quadrature too small for requested degree")
    return _stieltjes_cached(spec, N, nq)


@lru_cache(maxsize=32)
def _stieltjes_cached(spec: WeightSpec, N: int, nq: int) -> RecurrenceTable:
    x, lam = gauss_jacobi(nq, spec.alpha, spec.beta)
    lam = lam * h_eval(spec, x)
    mu0 = float(np.sum(lam))
    if not (mu0 > 0 and math.isfinite(mu0)):
        raise NumericalError("zeroth moment is not positive")
    a = np.zeros(N + 1)
    b = np.zeros(N + 1)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0 / math.sqrt(mu0))
    for k in range(N + 1):
        b[k] = np.sum(lam * x * p * p)
        if k == N:
            break
        q = (x - b[k]) * p - a[k] * p_prev
        nrm = math.sqrt(float(np.sum(lam * q * q)))
        if not nrm > 1e-10 or not math.isfinite(nrm):
            raise NumericalError(f"Stieltjes norm collapsed at degree {k + 1}")
        a[k + 1] = nrm
        p_prev, p = p, q / nrm
    log_gamma = np.empty(N + 1)
    log_gamma[0] = -0.5 * math.log(mu0)
    log_gamma[1:] = log_gamma[0] - np.cumsum(np.log(a[1:]))
    for arr in (a, b, log_gamma):
        arr.setflags(write=False)
    return RecurrenceTable(N, a, b, log_gamma, math.log(mu0))


def _check_degree(table: RecurrenceTable, n: int):
    if not 0 <= n <= table.N:
        raise ParameterError(f"degree {n} outside table range 0..{table.N}")


def eval_monic(table: RecurrenceTable, n: int, x):
    """Monic ``pi_n`` at real or complex points in log-scaled form.

    Returns ``(log|pi_n(x)|, pi_n(x) / |pi_n(x)|)``. The recurrence is
    rescaled as it runs so nothing overflows.
    """
    _check_degree(table, n)
    x = np.asarray(x)
    dtype = np.result_type(x, float)
    prev = np.zeros(x.shape, dtype=dtype)
    cur = np.ones(x.shape, dtype=dtype)
    logscale = np.zeros(x.shape)
    for k in range(n):
        prev, cur = cur, (x - table.b[k]) * cur - table.a[k] ** 2 * prev
        big = np.maximum(np.abs(cur), np.abs(prev))
        resc = big > 1e100
        if np.any(resc):
            s = np.where(resc, big, 1.0)
            cur = cur / s
            prev = prev / s
            logscale += np.log(s)
    if not np.all(np.isfinite(cur)):
        raise NumericalError("monic recurrence overflowed")
    mag = np.abs(cur)
    with np.errstate(divide="ignore"):
        logabs = np.log(mag) + logscale
    phase = np.where(mag > 0, cur / np.where(mag > 0, mag, 1.0), 1.0)
    if phase.ndim == 0:
        return float(logabs), phase[()]
    return logabs, phase


def monic_value(table: RecurrenceTable, n: int, x):
    """``pi_n(x)`` as a plain number; raises if it does not fit in a double."""
    logabs, phase = eval_monic(table, n, x)
    if np.any(logabs > 700):
        raise NumericalError("value exceeds double range; use eval_monic")
    return phase * np.exp(logabs)


def eval_orthonormal(table: RecurrenceTable, n: int, x):
    """Orthonormal ``p_0..p_n`` at the points ``x`` (rows indexed by degree)."""
    _check_degree(table, n)
    x = np.asarray(x)
    out = np.empty((n + 1,) + x.shape, dtype=np.result_type(x, float))
    out[0] = math.exp(table.log_gamma[0])
    if n >= 1:
        out[1] = (x - table.b[0]) * out[0] / table.a[1]
    for k in range(1, n):
        out[k + 1] = ((x - table.b[k]) * out[k] - table.a[k] * out[k - 1]) / table.a[k + 1]
    return out


def hankel_log_det(table: RecurrenceTable, n: int) -> float:
    """``log D_n`` of the Hankel moment matrix, via ``D_n / D_0 = prod gamma_j^{-2}``."""
    _check_degree(table, n)
    return float(table.log_mu0 - 2.0 * np.sum(table.log_gamma[1 : n + 1]))


def polynomial_zeros(table: RecurrenceTable, n: int) -> np.ndarray:
    """Zeros of ``pi_n`` in decreasing order (eigenvalues of the Jacobi matrix)."""
    _check_degree(table, n)
    if n == 0:
        return np.empty(0)
    vals = tridiag_eig(table.b[:n], table.a[1:n])
    return vals[::-1].copy()


def moments_hankel_det(spec: WeightSpec, n: int, nquad: int = 200) -> float:
    """Brute-force ``det[m_{i+j}]`` from quadrature moments. Small n only."""
    if n > 12:
        raise DomainError("direct Hankel determinant is ill-conditioned past n = 12")
    x, lam = gauss_jacobi(nquad, spec.alpha, spec.beta)
    lam = lam * h_eval(spec, x)
    mom = np.array([np.sum(lam * x**k) for k in range(2 * n + 1)])
    H = np.array([[mom[i + j] for j in range(n + 1)] for i in range(n + 1)])
    return float(np.linalg.det(H))
