import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.linalg import eigh_tridiagonal
from scipy.special import eval_jacobi, roots_jacobi

from rhjacobi.errors import DomainError, NumericalError, ParameterError
from rhjacobi.oracle import (
    eval_monic,
    eval_orthonormal,
    gauss_jacobi,
    hankel_log_det,
    jacobi_recurrence,
    moments_hankel_det,
    monic_value,
    polynomial_zeros,
    stieltjes,
    tridiag_eig,
)
from rhjacobi.weight import WeightSpec, h_eval, jacobi, legendre, weight_eval

exponents = st.floats(-0.9, 2.5)


@given(st.lists(st.floats(-3, 3), min_size=2, max_size=40), st.data())
def test_tridiagonal_eigenvalues_match_lapack(diag, data):
    off = data.draw(st.lists(st.floats(0.01, 2), min_size=len(diag) - 1, max_size=len(diag) - 1))
    vals, v = tridiag_eig(diag, off, first_row=True)
    ref, vecs = eigh_tridiagonal(np.array(diag), np.array(off))
    assert np.allclose(vals, ref, atol=1e-12)
    assert np.allclose(v**2, vecs[0] ** 2, atol=1e-10)


@given(exponents, exponents, st.integers(1, 60))
def test_gauss_jacobi_matches_scipy(a, b, n):
    x, w = gauss_jacobi(n, a, b)
    xr, wr = roots_jacobi(n, a, b)
    assert np.allclose(x, xr, atol=1e-13)
    assert np.allclose(w, wr, rtol=1e-10, atol=1e-15)


@given(exponents, exponents, st.integers(2, 30))
def test_gauss_jacobi_exact_for_low_degree(a, b, n):
    # integrates P_{2n-1}^{(a,b)} against the weight to zero
    x, w = gauss_jacobi(n, a, b)
    assert abs(np.sum(w * eval_jacobi(2 * n - 1, a, b, x))) < 1e-10 * np.sum(w)


def test_gauss_jacobi_arguments():
    with pytest.raises(ParameterError):
        gauss_jacobi(0, 0.0, 0.0)
    with pytest.raises(ParameterError):
        gauss_jacobi(4, -1.0, 0.0)
    x, _ = gauss_jacobi(5, 0.0, 0.0)
    with pytest.raises(ValueError):
        x[0] = 1.0


def test_classical_recurrences():
    t = stieltjes(legendre(), 60)
    n = np.arange(1, 61)
    assert np.max(np.abs(t.a[1:] - n / np.sqrt(4 * n**2 - 1))) < 1e-12
    assert np.max(np.abs(t.b)) < 1e-13
    b, a = jacobi_recurrence(61, 1.0, 0.0)
    t = stieltjes(jacobi(1.0, 0.0), 60)
    assert np.max(np.abs(t.b - b[:61])) < 1e-13
    assert np.max(np.abs(t.a[1:] - a[:60])) < 1e-13


def test_recurrence_table_conventions(spec_exp):
    t = stieltjes(spec_exp, 10)
    assert t.a[0] == 0 and len(t.a) == len(t.b) == len(t.log_gamma) == 11
    mu0, _ = quad(lambda x: weight_eval(spec_exp, x), -1, 1, limit=200)
    assert t.log_mu0 == pytest.approx(math.log(mu0), rel=1e-7)
    assert t.log_gamma[0] == pytest.approx(-0.5 * t.log_mu0)
    with pytest.raises(ParameterError):
        stieltjes(spec_exp, 0)
    with pytest.raises(ParameterError):
        stieltjes(spec_exp, 10, nquad=5)


@pytest.mark.parametrize("fixture", ["spec_exp", "spec_quad", "spec_poly"])
def test_orthonormality(fixture, request):
    spec = request.getfixturevalue(fixture)
    t = stieltjes(spec, 30)
    x, lam = roots_jacobi(80, spec.alpha, spec.beta)
    p = eval_orthonormal(t, 30, x)
    G = (p * lam * h_eval(spec, x)) @ p.T
    assert np.max(np.abs(G - np.eye(31))) < 1e-12


@given(exponents, exponents, st.integers(1, 40), st.floats(-1, 1))
def test_monic_matches_scaled_jacobi_polynomial(a, b, n, x):
    # leading coefficient of P_n^{(a,b)} is Gamma(2n+a+b+1) / (2^n n! Gamma(n+a+b+1))
    t = stieltjes(jacobi(a, b), n)
    lead = math.exp(math.lgamma(2 * n + a + b + 1) - n * math.log(2) - math.lgamma(n + 1) - math.lgamma(n + a + b + 1))
    ref = eval_jacobi(n, a, b, x) / lead
    assert monic_value(t, n, x) == pytest.approx(ref, abs=1e-10 * 2.0**-n * 4 + 1e-13 * abs(ref))


def test_log_scaled_evaluation_far_out():
    t = stieltjes(legendre(), 400)
    lo, ph = eval_monic(t, 400, 50.0 + 0j)
    # pi_n(z) ~ (phi/2)^n times an O(1) factor
    assert lo == pytest.approx(400 * math.log((50 + math.sqrt(2499)) / 2), rel=1e-3)
    assert abs(abs(ph) - 1) < 1e-14
    with pytest.raises(NumericalError):
        monic_value(t, 400, 50.0)
    with pytest.raises(ParameterError):
        eval_monic(t, 401, 0.0)


def test_hankel_determinant_against_moments(spec_exp, spec_poly):
    for spec in (spec_exp, spec_poly, legendre()):
        t = stieltjes(spec, 12)
        for n in (1, 4, 8):
            assert hankel_log_det(t, n) == pytest.approx(math.log(moments_hankel_det(spec, n)), rel=1e-8)
    with pytest.raises(DomainError):
        moments_hankel_det(legendre(), 13)


def test_zeros_decreasing_and_match_scipy():
    t = stieltjes(jacobi(0.7, -0.3), 25)
    z = polynomial_zeros(t, 25)
    assert np.all(np.diff(z) < 0)
    assert np.allclose(z[::-1], roots_jacobi(25, 0.7, -0.3)[0], atol=1e-13)
    assert polynomial_zeros(t, 0).size == 0


def test_zeros_are_roots_of_the_polynomial(spec_quad):
    t = stieltjes(spec_quad, 20)
    z = polynomial_zeros(t, 20)
    vals = eval_orthonormal(t, 20, z)[-1]
    assert np.max(np.abs(vals)) < 1e-10
