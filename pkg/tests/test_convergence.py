import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rhjacobi.convergence import (
    ConvergenceReport,
    fit_slope,
    gamma_study,
    hankel_study,
    recurrence_study,
    run_study,
    zeros_study,
)
from rhjacobi.errors import NumericalError, OrderError, ParameterError
from rhjacobi.weight import WeightSpec, legendre

KEYS = {"quantity", "n", "error", "fitted_slope", "target_slope", "constant_estimate", "pass"}


@given(st.floats(-6, -0.2), st.floats(0.01, 100))
def test_fit_slope_recovers_power_law(p, c):
    n = np.arange(8, 97, 8)
    assert fit_slope(n, c * n**p) == pytest.approx(p, abs=1e-10)


def test_fit_slope_needs_three_points():
    with pytest.raises(NumericalError):
        fit_slope([1, 2, 3], [1.0, 0.0, math.nan])


def test_report_json_shape():
    rep = recurrence_study(legendre(), "an", 0, list(range(8, 65, 8)))
    d = rep.to_dict()
    assert set(d) == KEYS
    json.dumps(d, allow_nan=False)
    assert d["pass"] and d["constant_estimate"] == pytest.approx(0.0625, abs=1e-4)


def test_exact_expansion_reports_pass_without_slope():
    rep = recurrence_study(legendre(), "bn", 0, [8, 16, 24])
    assert rep.passed and rep.fitted_slope is None
    assert rep.to_dict()["fitted_slope"] is None


def test_gamma_constants(spec_exp):
    rep = gamma_study(legendre(), 0, list(range(20, 101, 10)))
    assert rep.passed and rep.constant_estimate == pytest.approx(0.125, abs=2e-3)
    rep = gamma_study(legendre(), 1, list(range(20, 101, 10)))
    assert rep.passed and rep.constant_estimate == pytest.approx(7 / 128, rel=0.02)
    assert gamma_study(spec_exp, 2).passed


def test_hankel_constant_is_reported_as_fitted():
    rep = hankel_study(legendre())
    assert rep.passed
    assert 2.0 < rep.constant_estimate < 2.5
    assert rep.extra["log_C"] == pytest.approx(math.log(rep.constant_estimate))


def test_zeros_study_target():
    rep = zeros_study(legendre())
    assert rep.passed
    assert rep.extra["target"] == pytest.approx(2.8915929814733925, rel=1e-12)
    assert rep.constant_estimate == pytest.approx(rep.extra["target"], rel=0.02)


@pytest.mark.parametrize("quantity", ["outer", "gamma", "an", "bn", "hankel", "bulk", "edge", "zeros"])
def test_dispatch_on_nonsymmetric_weight(quantity, spec_quad):
    rep = run_study(spec_quad, quantity)
    assert isinstance(rep, ConvergenceReport)
    assert all(math.isfinite(e) and e >= 0 for e in rep.error)
    assert rep.passed, (quantity, rep.fitted_slope, rep.target_slope)


def test_dispatch_errors(spec_exp):
    with pytest.raises(ParameterError):
        run_study(spec_exp, "bogus")
    with pytest.raises(OrderError):
        run_study(spec_exp, "outer", 3)
    with pytest.raises(OrderError):
        run_study(spec_exp, "an", 5)
    with pytest.raises(ParameterError):
        recurrence_study(spec_exp, "cn")


def test_failed_fit_is_reported_not_raised():
    # order 1 for a_n with this weight converges slowly over a short range
    spec = WeightSpec(0.3, -0.4, "exp_poly", (0.0, 0.5))
    rep = recurrence_study(spec, "an", 1, list(range(8, 65, 8)))
    assert not rep.passed and rep.fitted_slope > rep.target_slope
