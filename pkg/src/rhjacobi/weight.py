"""Modified Jacobi weights ``w(x) = (1-x)^alpha (1+x)^beta h(x)``."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.polynomial import chebyshev as npcheb
from numpy.polynomial import polynomial as nppoly

from .errors import AnalyticityError, BranchError, DomainError, ParameterError
from .spectral import ChebSeries, EllipseContour, cheb_transform

H_KINDS = ("constant", "exp_poly", "positive_poly")


@dataclass(frozen=True)
class WeightSpec:
    """Exponents, perturbation and analyticity margin of a weight.

    ``h_coeffs`` are ascending monomial coefficients. For ``exp_poly`` they
    describe ``q`` in ``h = exp(q)``; for ``positive_poly`` they describe
    ``h`` itself; for ``constant`` a single positive number.
    """

    alpha: float
    beta: float
    h_kind: str = "constant"
    h_coeffs: tuple = (1.0,)
    margin: float = 0.5
    log_series_degree: int = field(default=64, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "h_coeffs", tuple(float(c) for c in self.h_coeffs))
        validate(self)

    @cached_property
    def log_h(self) -> ChebSeries:
        return logh_series(self)

    def h(self, z):
        return h_eval(self, z)

    def w(self, x):
        return weight_eval(self, x)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "h": {"kind": self.h_kind, "coeffs": list(self.h_coeffs)},
            "margin": self.margin,
        }


def from_dict(d: dict) -> WeightSpec:
    try:
        h = d.get("h", {"kind": "constant", "coeffs": [1.0]})
        return WeightSpec(
            float(d["alpha"]),
            float(d["beta"]),
            h.get("kind", "constant"),
            tuple(h.get("coeffs", [1.0])),
            float(d.get("margin", 0.5)),
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParameterError(f"malformed weight description: {exc}") from exc


def from_json(path) -> WeightSpec:
    with open(path) as fh:
        return from_dict(json.load(fh))


def legendre() -> WeightSpec:
    return WeightSpec(0.0, 0.0)


def jacobi(alpha: float, beta: float) -> WeightSpec:
    return WeightSpec(alpha, beta)


def validate(spec: WeightSpec) -> None:
    """Check exponents, kind and the analyticity/positivity of ``h``.

    Positivity on [-1, 1] is sampled at 2048 points; ``Re h > 0`` is sampled
    on the Bernstein ellipse with ``rho = 1 + margin``.
    """
    for name in ("alpha", "beta", "margin"):
        if not math.isfinite(getattr(spec, name)):
            raise ParameterError(f"{name} must be finite")
    if spec.alpha <= -1 or spec.beta <= -1:
        raise ParameterError("exponents must exceed -1")
    if spec.margin <= 0:
        raise ParameterError("analyticity margin must be positive")
    if spec.h_kind not in H_KINDS:
        raise ParameterError(f"unknown h kind {spec.h_kind!r}")
    if len(spec.h_coeffs) == 0 or not all(math.isfinite(c) for c in spec.h_coeffs):
        raise ParameterError("h coefficients must be a non-empty finite vector")
    if spec.h_kind == "constant":
        if len(spec.h_coeffs) != 1 or spec.h_coeffs[0] <= 0:
            raise AnalyticityError("constant h must be a single positive number")
        return
    x = np.cos(np.linspace(0.0, np.pi, 2048))
    if spec.h_kind == "positive_poly":
        if np.min(nppoly.polyval(x, spec.h_coeffs)) <= 0:
            raise AnalyticityError("polynomial h is not positive on [-1, 1]")
    zeta, _ = EllipseContour(1.0 + spec.margin, 512).points()
    if np.min(h_eval(spec, zeta).real) <= 0:
        raise AnalyticityError("Re h is not positive on the analyticity ellipse")


def h_eval(spec: WeightSpec, z):
    """Perturbation ``h`` at real or complex points."""
    z = np.asarray(z)
    c = spec.h_coeffs
    if spec.h_kind == "constant":
        return np.full(z.shape, c[0], dtype=np.result_type(z, float))
    if spec.h_kind == "exp_poly":
        return np.exp(nppoly.polyval(z, c))
    return nppoly.polyval(z, c)


def log_h_eval(spec: WeightSpec, z):
    """Analytic continuation of ``log h`` near [-1, 1].

    Exact for ``constant`` and ``exp_poly``; principal logarithm for
    ``positive_poly``, which is the continuation wherever ``Re h > 0``.
    """
    z = np.asarray(z)
    c = spec.h_coeffs
    if spec.h_kind == "constant":
        return np.full(z.shape, math.log(c[0]), dtype=np.result_type(z, float))
    if spec.h_kind == "exp_poly":
        return nppoly.polyval(z, c)
    return np.log(nppoly.polyval(z.astype(complex) if np.iscomplexobj(z) else z, c))


def sqrt_h_eval(spec: WeightSpec, z):
    """Principal square root of ``h``."""
    if spec.h_kind == "exp_poly":
        return np.exp(0.5 * nppoly.polyval(np.asarray(z), spec.h_coeffs))
    return np.sqrt(h_eval(spec, z))


def weight_eval(spec: WeightSpec, x):
    """``w(x)`` on the closed interval. Endpoint singularities give ``inf``."""
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1):
        raise DomainError("weight is only defined on [-1, 1]")
    with np.errstate(divide="ignore"):
        return (1.0 - x) ** spec.alpha * (1.0 + x) ** spec.beta * h_eval(spec, x)


def weight_continuation(spec: WeightSpec, z):
    """``(1-z)^alpha (1+z)^beta h(z)`` with principal powers.

    Analytic off ``(-inf, -1] U [1, inf)``; real points of that set raise.
    """
    z = np.asarray(z, dtype=complex)
    on_cut = (z.imag == 0) & (np.abs(z.real) >= 1)
    if np.any(on_cut):
        raise BranchError("continuation of w is cut along |x| >= 1")
    return (1.0 - z) ** spec.alpha * (1.0 + z) ** spec.beta * h_eval(spec, z)


def logh_series(spec: WeightSpec, m: int | None = None) -> ChebSeries:
    """Chebyshev coefficients of ``log h``.

    Exact for ``constant`` and ``exp_poly``; interpolated at ``m + 1``
    Lobatto points for ``positive_poly`` (default ``m = 64``).
    """
    if spec.h_kind == "constant":
        return ChebSeries(np.array([math.log(spec.h_coeffs[0])]), 0.0)
    if spec.h_kind == "exp_poly":
        return ChebSeries(npcheb.poly2cheb(np.array(spec.h_coeffs)), 0.0)
    m = spec.log_series_degree if m is None else m
    return cheb_transform(lambda x: np.log(nppoly.polyval(x, spec.h_coeffs)), m)


def jacobi_moment(alpha: float, beta: float) -> float:
    """``int_{-1}^{1} (1-x)^alpha (1+x)^beta dx``."""
    return math.exp(
        (alpha + beta + 1) * math.log(2.0)
        + math.lgamma(alpha + 1)
        + math.lgamma(beta + 1)
        - math.lgamma(alpha + beta + 2)
    )
