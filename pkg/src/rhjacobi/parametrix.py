"""Matrix-valued pieces of the steepest-descent analysis.

The outer parametrix ``N``, the Bessel model solution ``Psi``, the first jump
correction ``Delta_1`` near each endpoint and the residue matrices
``A^(k), B^(k)`` of the error expansion. These give independent routes to the
scalar coefficients in :mod:`rhjacobi.asymptotics`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import (
    besseli,
    besseli_prime,
    besselk,
    besselk_prime,
    hankel1,
    hankel1_prime,
    hankel2,
    hankel2_prime,
)
from .errors import DomainError, OrderError
from .szego import SzegoData, W_map, W_tilde, g_map, g_tilde, szego_D


def _a_fun(z):
    z = np.asarray(z, dtype=complex)
    return (z - 1) ** 0.25 / (z + 1) ** 0.25


def outer_parametrix(data: SzegoData, z) -> np.ndarray:
    """``N(z) = D_inf^{s3} [[(a+1/a)/2, (a-1/a)/2i], [(a-1/a)/(-2i), (a+1/a)/2]] D(z)^{-s3}``.

    For array input the matrix indices come first: shape ``(2, 2) + z.shape``.
    """
    a = _a_fun(z)
    Dz = szego_D(data, z)
    p, m = (a + 1 / a) / 2, (a - 1 / a) / 2j
    Di = data.D_inf
    return np.array([[Di * p / Dz, Di * m * Dz], [-m / (Di * Dz), p * Dz / Di]])


def _inv2(M):
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]]) / (M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0])


def _mm(A, B):
    return np.einsum("ij...,jk...->ik...", A, B)


def delta1(data: SzegoData, s, endpoint: int = 1, tilde_22: str = "beta") -> np.ndarray:
    """First jump correction on a small circle around ``endpoint``.

    Near +1: ``(1/(2g)) N W^{s3} [[-(al^2+1/4), -i/2], [-i/2, al^2+1/4]] W^{-s3} N^{-1}``.
    Near -1 the same with ``g~, W~`` and ``[[-(be^2+1/4), i/2], [i/2, x^2+1/4]]``
    where ``x`` is beta by default; ``tilde_22="alpha"`` takes the (2,2)
    entry with alpha instead, to compare the two readings.
    """
    s = np.asarray(s, dtype=complex)
    N = outer_parametrix(data, s)
    if endpoint == 1:
        q = data.alpha**2 + 0.25
        M = np.array([[-q, -0.5j], [-0.5j, q]])
        W = W_map(data.spec, s)
        g = g_map(s)
    elif endpoint == -1:
        q = data.beta**2 + 0.25
        q22 = q if tilde_22 == "beta" else data.alpha**2 + 0.25
        M = np.array([[-q, 0.5j], [0.5j, q22]])
        W = W_tilde(data.spec, s)
        g = g_tilde(s)
    else:
        raise DomainError("endpoint must be +1 or -1")
    M = M.reshape((2, 2) + (1,) * s.ndim)
    Wm = np.array([[W, 0 * W], [0 * W, 1 / W]])
    Wi = np.array([[1 / W, 0 * W], [0 * W, W]])
    inner = _mm(_mm(Wm, M * np.ones(s.shape)), Wi)
    return _mm(_mm(N, inner), _inv2(N)) / (2 * g)


def delta1_residue(data: SzegoData, endpoint: int = 1, radius: float = 0.2, nodes: int = 256,
                   tilde_22: str = "beta") -> np.ndarray:
    """Residue of :func:`delta1` at the endpoint by the trapezoid rule on a circle."""
    t = 2 * np.pi * (np.arange(nodes) + 0.5) / nodes
    e = np.exp(1j * t)
    s = endpoint + radius * e
    vals = delta1(data, s, endpoint, tilde_22)
    return np.mean(vals * (radius * e), axis=-1)


@dataclass(frozen=True)
class RConstants:
    """Residue matrices of the first two terms of the error expansion."""

    A1: np.ndarray
    B1: np.ndarray
    A2: np.ndarray
    B2: np.ndarray
    D_inf: float


def _conj(D, M):
    # D^{s3} M D^{-s3}
    return np.array([[M[0][0], M[0][1] * D * D], [M[1][0] / (D * D), M[1][1]]], dtype=complex)


def _second_order_entries(al, be, c):
    s = 8 * al + 8 * be + 8 * c
    A = s - 4 * be**2 + 1
    Dd = -s - 4 * be**2 + 1
    B = -s + 4 * al**2 + 4 * be**2 - 10
    C = -s - 4 * al**2 - 4 * be**2 + 10
    return A, B, C, Dd


def r_constants(data: SzegoData) -> RConstants:
    """``A^(1), B^(1), A^(2), B^(2)``.

    The -1 endpoint enters through ``-d_0``, the same reflected sign used in
    :class:`rhjacobi.asymptotics.AsymCoeffs`.
    """
    al, be, Di = data.alpha, data.beta, data.D_inf
    ma, mb = 4 * al**2 - 1, 4 * be**2 - 1
    A1 = ma / 16 * _conj(Di, [[-1, 1j], [1j, 1]])
    B1 = mb / 16 * _conj(Di, [[1, 1j], [1j, -1]])
    a, b, c, d = _second_order_entries(al, be, data.c0)
    A2 = ma / 256 * _conj(Di, [[a, 1j * b], [1j * c, d]])
    a, b, c, d = _second_order_entries(be, al, -data.d0)
    B2 = mb / 256 * _conj(Di, [[-a, 1j * b], [1j * c, -d]])
    return RConstants(A1, B1, A2, B2, Di)


def pi_from_r(rc: RConstants, z, k: int):
    """``Pi_k(z) = (R_k)_11 + (i / D_inf^2) ((a-1/a)/(a+1/a)) (R_k)_12`` outside the disks."""
    if k not in (1, 2):
        raise OrderError("only R_1 and R_2 are available")
    A, B = (rc.A1, rc.B1) if k == 1 else (rc.A2, rc.B2)
    z = np.asarray(z, dtype=complex)
    a = _a_fun(z)
    R11 = A[0, 0] / (z - 1) + B[0, 0] / (z + 1)
    R12 = A[0, 1] / (z - 1) + B[0, 1] / (z + 1)
    return R11 + 1j / rc.D_inf**2 * (a - 1 / a) / (a + 1 / a) * R12


def gamma_coeffs_from_r(rc: RConstants):
    """``Gamma_1, Gamma_2`` from the square root of the ``gamma_n^2`` expansion."""
    D2 = rc.D_inf**2
    s1 = 2j * D2 * (rc.A1[1, 0] + rc.B1[1, 0])
    s2 = 2j * D2 * (rc.A2[1, 0] + rc.B2[1, 0])
    # 1/(n+1) = 1/n - 1/n^2 + ..., then sqrt(1 + x) = 1 + x/2 - x^2/8
    g1 = s1 / 2
    g2 = (s2 - s1) / 2 - s1**2 / 8
    return complex(g1).real, complex(g2).real


def recurrence_coeffs_from_r(rc: RConstants):
    """``A_2`` and ``B_2`` from the ``a_n^2`` and ``b_n`` expansions."""
    D2 = rc.D_inf**2
    s = rc.A1 + rc.B1
    t = rc.A2 + rc.B2
    first = s[0, 1] / (2j * D2) - D2 * s[1, 0] / 2j
    A2 = t[0, 1] / (2j * D2) - D2 * t[1, 0] / 2j + s[1, 0] * s[0, 1]
    B2 = s[0, 0] - t[0, 0] - t[1, 1]
    return complex(first), complex(A2).real, complex(B2).real


def psi_parametrix(alpha: float, zeta: float, side: str | None = None) -> np.ndarray:
    """Bessel model solution ``Psi(zeta)`` at a real point.

    ``zeta > 0`` uses the ``I, K`` form. On the negative axis pass
    ``side='+'`` (from above, Hankel form times ``e^{alpha pi i s3 / 2}``) or
    ``side='-'`` (from below). Non-integer ``alpha`` in (-1, 1) only, since the
    Hankel functions are built from ``J_alpha`` and ``J_{-alpha}``.
    """
    if not -1 < alpha < 1 or alpha == 0:
        raise OrderError("Psi is provided for non-integer alpha in (-1, 1)")
    zeta = float(zeta)
    if zeta > 0:
        r = math.sqrt(zeta)
        x = 2 * r
        return np.array(
            [
                [besseli(alpha, x), 1j / math.pi * besselk(alpha, x)],
                [2j * math.pi * r * besseli_prime(alpha, x), -2 * r * besselk_prime(alpha, x)],
            ],
            dtype=complex,
        )
    if zeta == 0:
        raise DomainError("Psi is singular at the origin")
    r = math.sqrt(-zeta)
    x = 2 * r
    h1, h2 = hankel1(alpha, x), hankel2(alpha, x)
    h1p, h2p = hankel1_prime(alpha, x), hankel2_prime(alpha, x)
    e = np.exp(0.5j * alpha * math.pi)
    if side == "+":
        sq = 1j * r
        M = np.array([[0.5 * h1, 0.5 * h2], [math.pi * sq * h1p, math.pi * sq * h2p]])
        return M @ np.diag([e, 1 / e])
    if side == "-":
        sq = -1j * r
        M = np.array([[0.5 * h2, -0.5 * h1], [-math.pi * sq * h2p, math.pi * sq * h1p]])
        return M @ np.diag([1 / e, e])
    raise DomainError("on the negative axis give side='+' or side='-'")


def psi_asymptotic(zeta: float, alpha: float | None = None, terms: int = 0) -> np.ndarray:
    """Large-``zeta`` form of ``Psi(zeta) e^{-2 sqrt(zeta) s3}`` for ``zeta > 0``.

    ``terms=0`` is ``(2 pi sqrt(zeta))^{-s3/2} (1/sqrt 2) [[1, i], [i, 1]]``;
    ``terms=1`` adds the ``zeta^{-1/2}`` correction, which needs ``alpha``.
    """
    r = math.sqrt(zeta)
    lead = np.diag([(2 * math.pi * r) ** -0.5, (2 * math.pi * r) ** 0.5]) @ (
        np.array([[1, 1j], [1j, 1]]) / math.sqrt(2)
    )
    if terms == 0:
        return lead
    if terms != 1 or alpha is None:
        raise OrderError("terms must be 0, or 1 with alpha given")
    q = alpha**2 + 0.25
    corr = np.eye(2) + np.array([[-q, -0.5j], [-0.5j, q]]) / (4 * r)
    return lead @ corr
