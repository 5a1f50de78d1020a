"""Large-degree expansions for modified Jacobi orthogonal polynomials.

The correction coefficients depend on the weight only through
``alpha, beta``, the leading endpoint coefficients ``c_0, d_0`` and the
Szego constant ``D_inf``. Notation: ``ma = 4 alpha^2 - 1``, ``mb = 4 beta^2 - 1``.

Sign convention for ``d_0``: with ``d_0`` defined by its contour integral
(so ``d_0 = gamma`` for ``h = exp(gamma x)``), the expansions below involve
``-d_0`` wherever the -1 endpoint contributes. This is what reflection
``x -> -x`` requires (it sends ``c_0`` to ``-d_0``) and what the reference
recurrence coefficients confirm; ``dm`` below is that reflected value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_zero, besselj
from .errors import DomainError, OrderError
from .szego import SzegoData, phi, psi_phase, sqrt_z2m1, szego_D
from .weight import weight_eval


@dataclass(frozen=True)
class AsymCoeffs:
    alpha: float
    beta: float
    c0: float
    d0: float
    D_inf: float

    @classmethod
    def from_data(cls, data: SzegoData) -> "AsymCoeffs":
        return cls(data.alpha, data.beta, data.c0, data.d0, data.D_inf)

    @property
    def ma(self) -> float:
        return 4 * self.alpha**2 - 1

    @property
    def mb(self) -> float:
        return 4 * self.beta**2 - 1

    @property
    def dm(self) -> float:
        # endpoint -1 enters with the reflected sign, see module docstring
        return -self.d0

    # --- exterior expansion of 2^n pi_n / phi^n -------------------------

    def Pi1(self, z):
        ph = phi(z)
        return -self.ma / (8 * (ph - 1)) + self.mb / (8 * (ph + 1))

    def Pi2(self, z):
        al, be, ma, mb = self.alpha, self.beta, self.ma, self.mb
        ph = phi(z)
        z = np.asarray(z, dtype=complex)
        s = al + be
        return (
            ma * (s + self.c0) / (16 * (ph - 1))
            - mb * (s + self.dm) / (16 * (ph + 1))
            - ma * mb / (128 * (z * z - 1))
            + (2 * al**2 + 2 * be**2 - 5) / 64 * (ma / (ph - 1) ** 2 + mb / (ph + 1) ** 2)
        )

    # --- leading coefficients --------------------------------------------

    @property
    def Gamma1(self) -> float:
        return -(self.ma + self.mb) / 16

    @property
    def Gamma2(self) -> float:
        al, be, ma, mb = self.alpha, self.beta, self.ma, self.mb
        s = al + be
        return (
            ma / 32 * (s + self.c0)
            + mb / 32 * (s + self.dm)
            + (2 * al**2 + 2 * be**2 + 7) * (ma + mb) / 256
        )

    # --- orthonormal polynomials p_n = gamma_n pi_n ------------------------

    def P1(self, z):
        ph = phi(z)
        return -self.ma / 16 * (ph + 1) / (ph - 1) - self.mb / 16 * (ph - 1) / (ph + 1)

    def P2(self, z):
        al, be, ma, mb = self.alpha, self.beta, self.ma, self.mb
        ph = phi(z)
        s = al + be
        return (
            ma * (s + self.c0) / 32 * (ph + 1) / (ph - 1)
            + mb * (s + self.dm) / 32 * (ph - 1) / (ph + 1)
            + ma**2 / (128 * (ph - 1))
            - mb**2 / (128 * (ph + 1))
            - ma * mb / 64 * (ph**2 + 1) / (ph**2 - 1) ** 2
            + (2 * al**2 + 2 * be**2 - 5) * (ma / (64 * (ph - 1) ** 2) + mb / (64 * (ph + 1) ** 2))
            + (2 * al**2 + 2 * be**2 + 7) * (ma + mb) / 256
        )

    # --- recurrence coefficients -----------------------------------------

    @property
    def A2(self) -> float:
        return -(self.ma + self.mb) / 32

    @property
    def A3(self) -> float:
        s = self.alpha + self.beta
        return self.ma / 32 * (s + self.c0) + self.mb / 32 * (s + self.dm)

    @property
    def A4(self) -> float:
        al, be, ma, mb, c0, d0 = self.alpha, self.beta, self.ma, self.mb, self.c0, self.dm
        return (
            -(3 * al**2 + 3 * be**2 + 6 * al * be + 1) * (ma + mb) / 128
            - ma * mb / 256
            - ma / 128 * 3 * c0 * (2 * al + 2 * be + c0)
            - mb / 128 * 3 * d0 * (2 * al + 2 * be + d0)
        )

    @property
    def B2(self) -> float:
        return (self.beta**2 - self.alpha**2) / 4

    @property
    def B3(self) -> float:
        al, be = self.alpha, self.beta
        return (
            -(be**2 - al**2) / 4 * (1 + al + be)
            + self.c0 * self.ma / 16
            - self.dm * self.mb / 16
        )

    @property
    def B4(self) -> float:
        al, be, ma, mb, c0, d0 = self.alpha, self.beta, self.ma, self.mb, self.c0, self.dm
        return (
            -ma / 64 * 3 * c0 * (2 * al + 2 * be + 2 + c0)
            + mb / 64 * 3 * d0 * (2 * al + 2 * be + 2 + d0)
            + (be**2 - al**2) / 16 * (6 * al + 6 * be + 3 * al**2 + 3 * be**2 + 6 * al * be + 4)
        )

    @property
    def hankel_exponent(self) -> float:
        return (self.ma + self.mb) / 8


def _check_order(order: int, top: int):
    if order not in range(top + 1):
        raise OrderError(f"order must be between 0 and {top}")


def _outer_factor(data: SzegoData, z):
    """``(D_inf / D) (a + 1/a) / 2`` with ``a = ((z-1)/(z+1))^{1/4}``."""
    z = np.asarray(z, dtype=complex)
    a = (z - 1) ** 0.25 / (z + 1) ** 0.25
    return data.D_inf / szego_D(data, z) * (a + 1 / a) / 2


def outer_prediction(data: SzegoData, z, n: int, order: int = 2):
    """Exterior approximation of monic ``pi_n(z)`` in log-scaled form.

    Returns ``(log|pi_n|, phase)``, matching :func:`rhjacobi.oracle.eval_monic`.
    ``order`` counts the ``1/n^k`` corrections kept (0, 1 or 2).
    """
    _check_order(order, 2)
    co = AsymCoeffs.from_data(data)
    corr = 1.0
    if order >= 1:
        corr = corr + co.Pi1(z) / n
    if order >= 2:
        corr = corr + co.Pi2(z) / n**2
    lead = _outer_factor(data, z) * corr
    lphi = np.log(phi(z))
    logabs = n * (lphi.real - math.log(2.0)) + np.log(np.abs(lead))
    phase = np.exp(1j * n * lphi.imag) * lead / np.abs(lead)
    return logabs, phase


def orthonormal_outer_prediction(data: SzegoData, z, n: int, order: int = 2):
    """Exterior approximation of ``p_n(z)`` in log-scaled form, using
    ``p_n / phi^n ~ phi^{1/2} / (sqrt(2 pi) (z^2-1)^{1/4} D) (1 + P_1/n + P_2/n^2)``.
    """
    _check_order(order, 2)
    co = AsymCoeffs.from_data(data)
    corr = 1.0
    if order >= 1:
        corr = corr + co.P1(z) / n
    if order >= 2:
        corr = corr + co.P2(z) / n**2
    lead = _outer_factor(data, z) / (data.D_inf * math.sqrt(math.pi)) * corr
    lphi = np.log(phi(z))
    logabs = n * lphi.real + np.log(np.abs(lead))
    phase = np.exp(1j * n * lphi.imag) * lead / np.abs(lead)
    return logabs, phase


def log_gamma_prediction(data: SzegoData, n: int, order: int = 2) -> float:
    """``log gamma_n`` from ``gamma_n sqrt(pi) D_inf / 2^n ~ 1 + G_1/n + G_2/n^2``."""
    _check_order(order, 2)
    co = AsymCoeffs.from_data(data)
    corr = 1.0 + (co.Gamma1 / n if order >= 1 else 0.0) + (co.Gamma2 / n**2 if order >= 2 else 0.0)
    return n * math.log(2.0) - 0.5 * math.log(math.pi) - math.log(data.D_inf) + math.log(corr)


def recurrence_prediction(data: SzegoData, n: int, order: int = 3):
    """Truncated ``a_n = 1/2 + sum A_k/n^k`` and ``b_n = sum B_k/n^k``.

    ``order`` is the number of correction terms kept, 0..3 (k = 2..order+1).
    """
    _check_order(order, 3)
    co = AsymCoeffs.from_data(data)
    A = (co.A2, co.A3, co.A4)[:order]
    B = (co.B2, co.B3, co.B4)[:order]
    a = 0.5 + sum(v / n ** (k + 2) for k, v in enumerate(A))
    b = sum(v / n ** (k + 2) for k, v in enumerate(B))
    return a, b


def hankel_normalized(data: SzegoData, log_det: float, n: int) -> float:
    """``log D_n`` minus its explicit asymptotic part; tends to ``log C``."""
    co = AsymCoeffs.from_data(data)
    return (
        log_det
        - n * n * math.log(0.5)
        - n * math.log(math.pi * data.D_inf**2 / 2)
        - co.hankel_exponent * math.log(n)
    )


def bulk_prediction(data: SzegoData, x, n: int, delta: float = 0.1, scaled: bool = False):
    """Leading oscillatory approximation of ``pi_n(x)`` on ``[-1+delta, 1-delta]``.

    ``sqrt(2) D_inf / (2^n sqrt(w) (1-x^2)^{1/4}) cos((n+1/2) theta + psi - pi/4)``.
    With ``scaled`` the factor ``2^{-n}`` is dropped.
    """
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 - delta):
        raise DomainError("bulk formula is for |x| <= 1 - delta")
    theta = np.arccos(x)
    w = weight_eval(data.spec, x)
    amp = math.sqrt(2.0) * data.D_inf / (np.sqrt(w) * (1 - x * x) ** 0.25)
    val = amp * np.cos((n + 0.5) * theta + psi_phase(data, x) - np.pi / 4)
    return val if scaled else val * 2.0 ** (-n)


def edge_prediction(data: SzegoData, x, n: int, delta: float = 0.1, scaled: bool = False):
    """Bessel-type approximation of ``pi_n(x)`` on ``(1-delta, 1)``.

    ``sqrt(pi) D_inf (n theta)^{1/2} / (2^n sqrt(w) (1-x^2)^{1/4})
    (cos zeta_1 J_alpha(n theta) + sin zeta_1 J'_alpha(n theta))``.
    """
    x = np.asarray(x, dtype=float)
    if np.any((x <= 1 - delta) | (x >= 1)):
        raise DomainError("edge formula is for 1 - delta < x < 1")
    al = data.alpha
    theta = np.arccos(x)
    t = n * theta
    zeta1 = theta / 2 + psi_phase(data, x) + al * np.pi / 2
    j = besselj(al, t)
    jp = al / t * j - besselj(al + 1.0, t)
    w = weight_eval(data.spec, x)
    amp = math.sqrt(math.pi) * data.D_inf * np.sqrt(t) / (np.sqrt(w) * (1 - x * x) ** 0.25)
    val = amp * (np.cos(zeta1) * j + np.sin(zeta1) * jp)
    return val if scaled else val * 2.0 ** (-n)


def largest_zero_prediction(alpha: float, n: int, k: int = 1) -> float:
    """``x_{n,k} ~ 1 - j_{alpha,k}^2 / (2 n^2)``."""
    if n < 1:
        raise DomainError("degree must be positive")
    j = bessel_zero(alpha, k)
    return 1.0 - j * j / (2.0 * n * n)
