"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line listing its sub-checks;
the lines are printed in the pytest terminal summary and also when this file
is run as a script. Tolerances are the stated ones; nothing is relaxed.
"""
import math
import sys

import numpy as np

from rhjacobi.asymptotics import AsymCoeffs, bulk_prediction, edge_prediction
from rhjacobi.bessel import bessel_zero
from rhjacobi.convergence import hankel_study, outer_study
from rhjacobi.oracle import eval_monic, polynomial_zeros, stieltjes
from rhjacobi.parametrix import delta1_residue, pi_from_r, psi_asymptotic, psi_parametrix, r_constants
from rhjacobi.spectral import EllipseContour
from rhjacobi.szego import (
    W_map,
    W_tilde,
    endpoint_coefficients_contour,
    psi_phase,
    szego_D,
    szego_D_boundary,
    szego_data,
    wd_expansion,
)
from rhjacobi.weight import WeightSpec, jacobi, legendre, weight_eval

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = {}

SPEC = WeightSpec(0.3, -0.4, "exp_poly", (0.0, 0.5))
CHEB = WeightSpec(-0.5, -0.5)


def _record(k, checks):
    ok = all(c[1] for c in checks)
    parts = "; ".join(f"{name} {'ok' if good else 'FAILED'} ({detail})" for name, good, detail in checks)
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} | {parts}"
    ACCEPTANCE_LINES[k] = line
    print(line)
    return ok


def _scaled(table, n, x):
    lo, ph = eval_monic(table, n, x)
    return np.real(ph) * np.exp(lo + n * math.log(2.0))


def test_criterion_01_oracle_fidelity():
    n = np.arange(1, 61)
    leg = stieltjes(legendre(), 60)
    e_leg = np.max(np.abs(leg.a[1:] - n / np.sqrt(4 * n**2 - 1)))
    ch = stieltjes(CHEB, 60)
    ref = np.full(60, 0.5)
    ref[0] = 1 / math.sqrt(2)
    e_ch = np.max(np.abs(ch.a[1:] - ref))
    jb = stieltjes(jacobi(1.0, 0.0), 250)
    m = np.arange(251)
    e_jb = np.max(np.abs(jb.b - (-1.0 / ((2 * m + 1) * (2 * m + 3)))))
    assert _record(1, [
        ("Legendre a_n, n<=60", e_leg <= 1e-12, f"max err {e_leg:.1e}"),
        ("Chebyshev a_n, n<=60", e_ch <= 1e-12, f"max err {e_ch:.1e}"),
        ("Jacobi(1,0) b_n, n<=250", e_jb <= 1e-11, f"max err {e_jb:.1e}"),
    ])


def test_criterion_02_recurrence_constants():
    t = stieltjes(legendre(), 60)
    n = 60
    a2 = n**2 * (t.a[n] - 0.5)
    a4 = n**4 * (t.a[n] - 0.5 - 1 / (16 * n**2))
    co = AsymCoeffs.from_data(szego_data(jacobi(1.0, 0.0)))
    # n^2 b_n = -1/4 (1 - 2/n + ...), so 1% needs n of a few hundred
    m = 250
    tj = stieltjes(jacobi(1.0, 0.0), m)
    b2 = m**2 * tj.b[m]
    b3 = m**3 * (tj.b[m] + 1 / (4 * m**2))
    assert _record(2, [
        ("n^2(a_n-1/2)->1/16 @60", abs(a2 - 1 / 16) <= 5e-3, f"{a2:.6f}"),
        ("n^4(...)->3/256 @60", abs(a4 - 3 / 256) <= 2e-3, f"{a4:.6f}"),
        ("B2 formula = -1/4", co.B2 == -0.25, f"{co.B2}"),
        ("B3 formula = 1/2", abs(co.B3 - 0.5) < 1e-15, f"{co.B3}"),
        ("n^2 b_n->-1/4 @250", abs(b2 / -0.25 - 1) <= 0.01, f"{b2:.6f}"),
        ("n^3(b_n+1/(4n^2))->1/2 @250", abs(b3 / 0.5 - 1) <= 0.01, f"{b3:.6f}"),
    ])


def _gamma_ratio(spec, n):
    data = szego_data(spec)
    t = stieltjes(spec, n)
    return math.exp(t.log_gamma[n] + 0.5 * math.log(math.pi) + math.log(data.D_inf) - n * math.log(2.0))


def test_criterion_03_leading_coefficients():
    n = 60
    checks = []
    for name, spec in (("Legendre", legendre()), ("(0.3,-0.4,exp(x/2))", SPEC)):
        g1 = AsymCoeffs.from_data(szego_data(spec)).Gamma1
        est = n * (_gamma_ratio(spec, n) - 1)
        checks.append((f"Gamma1 {name} @60", abs(est - g1) <= 5e-3, f"{est:.6f} vs {g1:.6f}"))
    est2 = n**2 * (_gamma_ratio(legendre(), n) - 1 - 0.125 / n)
    checks.append(("Gamma2 Legendre -7/128 @60", abs(est2 / (-7 / 128) - 1) <= 0.02, f"{est2:.6f}"))
    assert _record(3, checks)


def test_criterion_04_outer_rates():
    ns = list(range(8, 97, 8))
    checks = []
    for order, target in ((0, -0.9), (1, -1.9), (2, -2.8)):
        rep = outer_study(SPEC, order, ns, 1.5 + 0.5j)
        checks.append((f"order {order} slope<={target}", rep.fitted_slope <= target, f"{rep.fitted_slope:.3f}"))
    assert _record(4, checks)


def test_criterion_05_bulk():
    data = szego_data(CHEB)
    t = stieltjes(CHEB, 60)
    x = np.linspace(-0.9, 0.9, 37)
    worst = 0.0
    for n in range(1, 61):
        pred = bulk_prediction(data, x, n, scaled=True)
        worst = max(worst, np.max(np.abs(_scaled(t, n, x) - pred)) / np.max(np.abs(pred)))
    ld = szego_data(legendre())
    lt = stieltjes(legendre(), 80)
    ns = np.arange(10, 81)
    ne = np.array([n * abs(_scaled(lt, n, 0.2) - bulk_prediction(ld, 0.2, n, scaled=True)) for n in ns])
    early, late = ne[ns <= 40].max(), ne[ns > 40].max()
    assert _record(5, [
        ("Chebyshev exact, n<=60", worst <= 1e-10, f"max rel {worst:.1e}"),
        ("Legendre n*err at 0.2 bounded", late <= 1.2 * early, f"max {early:.4f} (n<=40) vs {late:.4f} (n>40)"),
    ])


def _edge_bulk_gap(spec):
    data = szego_data(spec)
    x = np.linspace(0.905, 0.995, 10)
    gap = 0.0
    for n in (10, 30, 60):
        e = edge_prediction(data, x, n, scaled=True)
        b = bulk_prediction(data, x, n, delta=0.0, scaled=True)
        gap = max(gap, np.max(np.abs(e - b)) / np.max(np.abs(b)))
    return gap


def test_criterion_06_edge_and_zeros():
    n = 50
    t = stieltjes(legendre(), n)
    scaled = n * n * (1 - polynomial_zeros(t, n)[0])
    target = bessel_zero(0.0, 1) ** 2 / 2
    g_minus = _edge_bulk_gap(CHEB)
    g_plus = _edge_bulk_gap(WeightSpec(0.5, 0.5))
    assert _record(6, [
        ("n^2(1-x_1)->j^2/2 @50", abs(scaled / target - 1) <= 0.02, f"{scaled:.5f} vs {target:.5f}"),
        ("edge=bulk alpha=-1/2", g_minus <= 1e-10, f"rel gap {g_minus:.1e}"),
        ("edge=bulk alpha=+1/2", g_plus <= 1e-10, f"rel gap {g_plus:.1e}, an O(1/n) term"),
    ])


def test_criterion_07_hankel():
    co = AsymCoeffs.from_data(szego_data(legendre()))
    rep = hankel_study(legendre(), list(range(10, 101, 10)))
    assert _record(7, [
        ("s=-1/4", co.hankel_exponent == -0.25, f"{co.hankel_exponent}"),
        ("difference slope<=-0.8", rep.fitted_slope <= -0.8, f"{rep.fitted_slope:.3f}, C~{rep.constant_estimate:.5f}"),
    ])


def test_criterion_08_endpoint_coefficients():
    g = 0.5
    spec = WeightSpec(0.0, 0.0, "exp_poly", (0.0, g))
    c = endpoint_coefficients_contour(spec, 2, EllipseContour(1.3, 512), 1)
    d = endpoint_coefficients_contour(spec, 2, EllipseContour(1.3, 512), -1)
    e0 = max(abs(c[0] - g), abs(d[0] - g))
    drift = 0.0
    for ep in (1, -1):
        r1 = endpoint_coefficients_contour(SPEC, 2, EllipseContour(1.2, 512), ep)
        r2 = endpoint_coefficients_contour(SPEC, 2, EllipseContour(1.45, 512), ep)
        drift = max(drift, np.max(np.abs(r1 - r2)))
    data = szego_data(SPEC)
    t = np.linspace(0.1, 2 * np.pi - 0.1, 32)
    werr = 0.0
    for ep, W in ((1, W_map), (-1, W_tilde)):
        z = ep + 0.05 * np.exp(1j * t)
        ratio = (W(SPEC, z) / szego_D(data, z)) ** 2
        werr = max(werr, np.max(np.abs(wd_expansion(data, z, ep) / ratio - 1)))
    assert _record(8, [
        ("c0=d0=0.5", e0 <= 1e-9, f"err {e0:.1e}"),
        ("rho 1.2 vs 1.45", drift <= 1e-10, f"max diff {drift:.1e}"),
        ("(W/D)^2 expansion at 0.05", werr <= 1e-9, f"rel err {werr:.1e}"),
    ])


def test_criterion_09_parametrix():
    al = 0.3
    pts = [0.5, 5.0, 50.0]
    det_err = 0.0
    jump_err = 0.0
    for z in pts:
        for P in (psi_parametrix(al, z), psi_parametrix(al, -z, "+"), psi_parametrix(al, -z, "-")):
            det_err = max(det_err, abs(np.linalg.det(P) - 1))
        Pp, Pm = psi_parametrix(al, -z, "+"), psi_parametrix(al, -z, "-")
        jump_err = max(jump_err, np.max(np.abs(Pp - Pm @ np.array([[0, 1], [-1, 0]]))))
    zeta = 400.0
    r = math.sqrt(zeta)
    M = psi_parametrix(al, zeta) @ np.diag([math.exp(-2 * r), math.exp(2 * r)])
    L = psi_asymptotic(zeta)
    asym = np.linalg.norm(M - L) / np.linalg.norm(L)
    data = szego_data(SPEC)
    res = np.max(np.abs(delta1_residue(data, 1) - r_constants(data).A1))
    assert _record(9, [
        ("det Psi=1", det_err <= 1e-10, f"max {det_err:.1e}"),
        ("jump on negative axis", jump_err <= 1e-9, f"max {jump_err:.1e}"),
        ("large zeta @400", asym <= 5e-3, f"rel err {asym:.2e}, leading term only"),
        ("Delta1 residue = A1", res <= 1e-8, f"max {res:.1e}"),
    ])


def test_criterion_10_internal_consistency():
    data = szego_data(SPEC)
    co = AsymCoeffs.from_data(data)
    re, im = np.meshgrid(np.linspace(-2, 2, 5), np.linspace(0.6, 2.0, 5))
    z = (re + 1j * im).ravel()
    e_pi = np.max(np.abs(pi_from_r(r_constants(data), z, 1) - co.Pi1(z)))
    e_p1 = np.max(np.abs(co.P1(z) - co.Pi1(z) - co.Gamma1))
    e_p2 = np.max(np.abs(co.P2(z) - co.Pi2(z) - co.Gamma1 * co.Pi1(z) - co.Gamma2))
    x = np.linspace(-0.99, 0.99, 99)
    w = weight_eval(SPEC, x)
    dp, dm = szego_D_boundary(data, x, "+"), szego_D_boundary(data, x, "-")
    e_w = np.max(np.abs(dp * dm - w))
    e_ph = np.max(np.abs(dp - np.sqrt(w) * np.exp(-1j * psi_phase(data, x))))
    assert _record(10, [
        ("Pi1 via R1, 25 pts", e_pi <= 1e-12, f"{e_pi:.1e}"),
        ("P1 identity", e_p1 <= 1e-12, f"{e_p1:.1e}"),
        ("P2 identity", e_p2 <= 1e-12, f"{e_p2:.1e}"),
        ("D+D-=w", e_w <= 1e-11, f"{e_w:.1e}"),
        ("D+=sqrt(w)e^{-i psi}", e_ph <= 1e-9, f"{e_ph:.1e}"),
    ])


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
