"""Empirical convergence studies: expansion versus reference values.

Each study evaluates an error sequence over a grid of degrees, fits the
slope of ``log error`` against ``log n`` and compares it with a target.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymptotics import (
    AsymCoeffs,
    bulk_prediction,
    edge_prediction,
    hankel_normalized,
    outer_prediction,
    recurrence_prediction,
)
from .bessel import bessel_zero
from .errors import NumericalError, OrderError, ParameterError
from .oracle import eval_monic, hankel_log_det, polynomial_zeros, stieltjes
from .szego import SzegoData, szego_data
from .weight import WeightSpec, weight_eval

QUANTITIES = ("outer", "gamma", "an", "bn", "hankel", "bulk", "edge", "zeros")
NOISE_FLOOR = 1e-13


@dataclass
class ConvergenceReport:
    quantity: str
    n: list
    error: list
    fitted_slope: float | None
    target_slope: float
    constant_estimate: float
    passed: bool
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "n": [int(v) for v in self.n],
            "error": [float(v) for v in self.error],
            "fitted_slope": None if self.fitted_slope is None else float(self.fitted_slope),
            "target_slope": float(self.target_slope),
            "constant_estimate": float(self.constant_estimate),
            "pass": bool(self.passed),
        }


def fit_slope(n, err) -> float:
    """Least-squares slope of ``log err`` against ``log n``."""
    n = np.asarray(n, dtype=float)
    err = np.asarray(err, dtype=float)
    ok = np.isfinite(err) & (err > 0)
    if ok.sum() < 3:
        raise NumericalError("fewer than three usable points for the slope fit")
    return float(np.polyfit(np.log(n[ok]), np.log(err[ok]), 1)[0])


def _report(quantity, ns, errs, target, constant, extra=None) -> ConvergenceReport:
    errs = [float(e) for e in errs]
    if not all(math.isfinite(e) for e in errs) or not math.isfinite(constant):
        raise NumericalError("non-finite value in convergence study")
    if max(errs) < NOISE_FLOOR:
        # exact agreement: nothing to fit, the expansion terminates
        return ConvergenceReport(quantity, list(ns), errs, None, target, constant, True, extra or {})
    slope = fit_slope(ns, errs)
    return ConvergenceReport(quantity, list(ns), errs, slope, target, constant, slope <= target, extra or {})


def _data(spec: WeightSpec, data: SzegoData | None) -> SzegoData:
    return szego_data(spec) if data is None else data


def outer_study(spec, order=2, ns=None, z=1.5 + 0.5j, data=None) -> ConvergenceReport:
    """Relative error of the exterior expansion at a fixed point ``z``."""
    ns = list(ns or range(8, 97, 8))
    if order not in (0, 1, 2):
        raise OrderError("outer order must be 0, 1 or 2")
    data = _data(spec, data)
    table = stieltjes(spec, max(ns))
    errs = []
    for n in ns:
        lo, po = eval_monic(table, n, z)
        lp, pp = outer_prediction(data, z, n, order)
        errs.append(abs(math.exp(lo - lp) * po / pp - 1))
    target = (-0.9, -1.9, -2.8)[order]
    return _report("outer", ns, errs, target, errs[-1] * ns[-1] ** (order + 1))


def gamma_study(spec, order=1, ns=None, data=None) -> ConvergenceReport:
    """Error of ``gamma_n sqrt(pi) D_inf / 2^n`` against ``1 + G_1/n + G_2/n^2``."""
    ns = list(ns or range(10, 101, 10))
    if order not in (0, 1, 2):
        raise OrderError("gamma order must be 0, 1 or 2")
    data = _data(spec, data)
    co = AsymCoeffs.from_data(data)
    table = stieltjes(spec, max(ns))
    errs = []
    for n in ns:
        ratio = math.exp(table.log_gamma[n] + 0.5 * math.log(math.pi) + math.log(data.D_inf) - n * math.log(2))
        terms = (co.Gamma1 / n, co.Gamma2 / n**2)[:order]
        errs.append(abs(ratio - 1 - sum(terms)))
    target = (-0.9, -1.9, -2.8)[order]
    return _report("gamma", ns, errs, target, errs[-1] * ns[-1] ** (order + 1))


def recurrence_study(spec, which="an", order=0, ns=None, data=None) -> ConvergenceReport:
    """Error of ``a_n`` or ``b_n`` with ``order`` correction terms kept.

    ``constant_estimate`` is ``n^{order+2}`` times the error at the last
    degree, i.e. an estimate of the first omitted coefficient.
    """
    if which not in ("an", "bn"):
        raise ParameterError("which must be 'an' or 'bn'")
    if order not in (0, 1, 2, 3):
        raise OrderError("recurrence order must be 0..3")
    ns = list(ns or range(8, 65, 8))
    data = _data(spec, data)
    table = stieltjes(spec, max(ns))
    errs, signed = [], []
    for n in ns:
        a, b = recurrence_prediction(data, n, order)
        d = table.a[n] - a if which == "an" else table.b[n] - b
        errs.append(abs(d))
        signed.append(d)
    target = -0.9 * (order + 2)
    return _report(which, ns, errs, target, signed[-1] * ns[-1] ** (order + 2))


def hankel_sequence(spec, ns, data=None):
    data = _data(spec, data)
    table = stieltjes(spec, max(ns))
    return [hankel_normalized(data, hankel_log_det(table, n), n) for n in ns]


def hankel_study(spec, ns=None, data=None) -> ConvergenceReport:
    """Successive differences of the normalised ``log D_n``.

    The constant ``C`` has no closed form here; ``constant_estimate``
    is ``exp`` of a one-step Richardson extrapolation of the sequence.
    """
    ns = list(ns or range(10, 101, 10))
    data = _data(spec, data)
    seq = hankel_sequence(spec, sorted(set(ns) | {n - 1 for n in ns}), data)
    lookup = dict(zip(sorted(set(ns) | {n - 1 for n in ns}), seq))
    errs = [abs(lookup[n] - lookup[n - 1]) for n in ns]
    n1, n2 = ns[-2], ns[-1]
    logC = (n2 * lookup[n2] - n1 * lookup[n1]) / (n2 - n1)
    return _report("hankel", ns, errs, -0.8, math.exp(logC), {"log_C": logC})


def _scaled_oracle(table, n, x):
    lo, ph = eval_monic(table, n, x)
    return np.real(ph) * np.exp(lo + n * math.log(2.0))


def bulk_errors(spec, ns, xs, data=None):
    """Amplitude-relative bulk error ``max_x |2^n (pi_n - pred)| / amp(x)``."""
    data = _data(spec, data)
    table = stieltjes(spec, max(ns))
    xs = np.asarray(xs, dtype=float)
    amp = math.sqrt(2) * data.D_inf / (np.sqrt(weight_eval(spec, xs)) * (1 - xs**2) ** 0.25)
    out = []
    for n in ns:
        diff = _scaled_oracle(table, n, xs) - bulk_prediction(data, xs, n, scaled=True)
        out.append(float(np.max(np.abs(diff) / amp)))
    return out


def bulk_study(spec, ns=None, xs=None, data=None) -> ConvergenceReport:
    ns = list(ns or range(10, 81, 5))
    xs = np.linspace(-0.85, 0.85, 35) if xs is None else xs
    errs = bulk_errors(spec, ns, xs, data)
    return _report("bulk", ns, errs, -0.8, errs[-1] * ns[-1])


def edge_errors(spec, ns, ts=(0.5, 1.0, 1.5, 2.0, 2.5, 3.0), data=None):
    """Edge error at ``x = cos(t/n)``, relative to the largest oracle value."""
    data = _data(spec, data)
    table = stieltjes(spec, max(ns))
    ts = np.asarray(ts, dtype=float)
    out = []
    for n in ns:
        x = np.cos(ts / n)
        ref = _scaled_oracle(table, n, x)
        pred = edge_prediction(data, x, n, scaled=True)
        out.append(float(np.max(np.abs(ref - pred)) / np.max(np.abs(ref))))
    return out


def edge_study(spec, ns=None, ts=(0.5, 1.0, 1.5, 2.0, 2.5, 3.0), data=None) -> ConvergenceReport:
    ns = list(ns or range(20, 101, 10))
    errs = edge_errors(spec, ns, ts, data)
    return _report("edge", ns, errs, -0.8, errs[-1] * ns[-1])


def zeros_study(spec, k=1, ns=None) -> ConvergenceReport:
    """``|n^2 (1 - x_{n,k}) - j_{alpha,k}^2 / 2|`` against n."""
    ns = list(ns or range(10, 101, 10))
    table = stieltjes(spec, max(ns))
    j2 = bessel_zero(spec.alpha, k) ** 2 / 2
    scaled = [n * n * (1 - polynomial_zeros(table, n)[k - 1]) for n in ns]
    errs = [abs(s - j2) for s in scaled]
    return _report("zeros", ns, errs, -0.8, scaled[-1], {"target": j2})


def run_study(spec: WeightSpec, quantity: str, order: int | None = None, ns=None, z=1.5 + 0.5j) -> ConvergenceReport:
    """Dispatch used by the command line."""
    if quantity not in QUANTITIES:
        raise ParameterError(f"unknown quantity {quantity!r}")
    if quantity == "outer":
        return outer_study(spec, 2 if order is None else order, ns, z)
    if quantity == "gamma":
        return gamma_study(spec, 1 if order is None else order, ns)
    if quantity in ("an", "bn"):
        return recurrence_study(spec, quantity, 0 if order is None else order, ns)
    if quantity == "hankel":
        return hankel_study(spec, ns)
    if quantity == "bulk":
        return bulk_study(spec, ns)
    if quantity == "edge":
        return edge_study(spec, ns)
    return zeros_study(spec, 1 if order is None else max(order, 1), ns)
