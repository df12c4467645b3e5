"""End-to-end acceptance gates, one test per released guarantee.

Each test pins a tolerance that is part of the package contract; loosening
one here is an API break, not a test fix.  Runtime guards use generous
wall-clock budgets so they only catch algorithmic regressions (a linear
scan turning quadratic), not machine jitter.
"""

import math
import time

import numpy as np

from dirichlet_ops import (
    FULL,
    ZERO_SUBSPACE,
    DirichletPolynomial,
    bv_check,
    classify_point,
    coefficient_close,
    derivative_multiplier,
    differentiate,
    dirichlet_multiply,
    ergodicity_diagnostic,
    eta_rule,
    evaluate,
    integrate,
    integration_multiplier,
    monomial,
    normalized_power_norm,
    ones_rule,
    partial_sum,
    reciprocal_spectrum_check,
    resolvent_apply,
    scale,
    seminorm,
    sigma_a_estimate,
    sigma_c_estimate,
    spectral_gap,
    truncation_for_tolerance,
    volterra_apply,
    volterra_identity_check,
    zeta_shift_rule,
    apply,
)
from dirichlet_ops.operators import Multiplier


def _random_poly(rng, max_index, n_terms, zero_constant):
    lo = 2 if zero_constant else 1
    indices = rng.choice(np.arange(lo, max_index + 1), size=n_terms, replace=False)
    coeffs = rng.standard_normal(n_terms) + 1j * rng.standard_normal(n_terms)
    return DirichletPolynomial({int(n): complex(c) for n, c in zip(indices, coeffs)})


def test_differentiation_integration_inverse_pair():
    rng = np.random.default_rng(101)
    t0 = time.perf_counter()
    for _ in range(200):
        f = _random_poly(rng, max_index=512, n_terms=int(rng.integers(1, 9)),
                         zero_constant=True)
        assert coefficient_close(integrate(differentiate(f)), f, rtol=1e-12)
        assert coefficient_close(differentiate(integrate(f)), f, rtol=1e-12)
    assert time.perf_counter() - t0 < 1.0


def test_spectrum_ladder_and_exact_annihilation():
    t0 = time.perf_counter()
    for n in range(2, 1001):
        lam = -math.log(n)
        cls = classify_point(lam, ZERO_SUBSPACE)
        assert cls.kind == "eigenvalue"
        assert cls.n == n
        # (lambda I - D) has symbol lambda + log m; at m = n it vanishes
        # exactly, so the monomial is annihilated with no rounding at all
        shifted = Multiplier(symbol=lambda m, lam=lam: lam + math.log(m),
                             label="lambda-shift")
        assert apply(shifted, monomial(n)).is_zero
    assert time.perf_counter() - t0 < 1.0


def test_cesaro_growth_closed_forms_and_divergence_verdicts():
    d, j = derivative_multiplier(), integration_multiplier()
    f3, f2 = monomial(3), monomial(2)
    log2, log3 = math.log(2.0), math.log(3.0)
    for eps in (0.1, 1.0):
        for k in range(1, 41):
            got_d = normalized_power_norm(d, f3, eps, k)
            want_d = log3**k / (k * 3.0**eps)
            assert abs(got_d - want_d) <= 1e-9 * want_d
            got_j = normalized_power_norm(j, f2, eps, k)
            want_j = 1.0 / (k * log2**k * 2.0**eps)
            assert abs(got_j - want_j) <= 1e-9 * want_j
        assert ergodicity_diagnostic(d, f3, eps, 40).verdict == "diverges"
        assert ergodicity_diagnostic(j, f2, eps, 40).verdict == "diverges"


def test_resolvent_round_trip_and_gap_bound():
    rng = np.random.default_rng(404)
    accepted = 0
    while accepted < 50:
        lam = complex(rng.uniform(-5.0, 2.0), rng.uniform(-4.0, 4.0))
        mu = spectral_gap(lam)
        if mu <= 0.05:
            continue
        accepted += 1
        f = _random_poly(rng, max_index=256, n_terms=int(rng.integers(1, 9)),
                         zero_constant=False)
        out = resolvent_apply(lam, f, FULL)
        back = apply(
            Multiplier(symbol=lambda m, lam=lam: lam + math.log(m), label="lambda-shift"),
            out,
        )
        assert coefficient_close(back, f, rtol=1e-10)
        for n, b in f.items():
            assert abs(out.coefficient(n)) <= (abs(b) / mu) * (1.0 + 1e-12)


def test_bounded_variation_constant_stabilizes():
    lam, delta = 1.0, 0.5
    report = bv_check(lam, delta, N=10**4)
    half = bv_check(lam, delta, N=5 * 10**3)
    assert report.verdict == "bounded"
    assert abs(report.fitted_constant - half.fitted_constant) <= 0.01 * report.fitted_constant

    # the fitted C must majorize every scanned increment termwise
    mu = report.gap
    C = report.fitted_constant
    ns = np.arange(2, report.N + 2, dtype=np.float64)
    gamma = 1.0 / ((np.log(ns) + lam) * ns**delta)
    diffs = np.abs(np.diff(gamma))
    bound = (C / (mu * mu)) * ns[:-1] ** -1.25
    assert np.all(diffs <= bound * (1.0 + 1e-9))


def test_reciprocal_spectrum_sweep_consistent():
    rng = np.random.default_rng(606)
    points = [-math.log(n) for n in range(2, 51)]
    while len(points) < 200:
        if rng.uniform() < 0.5:
            mu = complex(rng.uniform(-3.0, 3.0), 0.0)
        else:
            mu = complex(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0))
        if abs(mu) > 1e-9:
            points.append(mu)
    reports = [reciprocal_spectrum_check(mu) for mu in points]
    assert len(reports) == 200
    assert all(r.consistent for r in reports)


def test_volterra_identity_coefficientwise():
    rng = np.random.default_rng(707)
    for _ in range(100):
        g = _random_poly(rng, max_index=128, n_terms=int(rng.integers(1, 9)),
                         zero_constant=False)
        report = volterra_identity_check(g)
        assert report.match
        want = g - scale(g.coefficient(1), monomial(1))
        assert coefficient_close(report.lhs, want, rtol=1e-12)
        f = _random_poly(rng, max_index=64, n_terms=int(rng.integers(1, 7)),
                         zero_constant=False)
        assert volterra_apply(g, f).coefficient(1) == 0


def test_convolution_matches_pointwise_product():
    rng = np.random.default_rng(808)
    for _ in range(100):
        f = _random_poly(rng, max_index=64, n_terms=int(rng.integers(1, 8)),
                         zero_constant=False)
        g = _random_poly(rng, max_index=64, n_terms=int(rng.integers(1, 8)),
                         zero_constant=False)
        s = complex(rng.uniform(0.1, 3.0), rng.uniform(-10.0, 10.0))
        product = evaluate(f, s) * evaluate(g, s)
        convolved = evaluate(dirichlet_multiply(f, g), s)
        assert abs(convolved - product) <= 1e-10 * (1.0 + abs(product))


def test_abscissa_corpus_known_values():
    t0 = time.perf_counter()
    N = 10**5
    ones_c = sigma_c_estimate(ones_rule(), N)
    ones_a = sigma_a_estimate(ones_rule(), N)
    assert abs(ones_c.value - 1.0) <= 0.02
    assert abs(ones_a.value - 1.0) <= 0.02
    eta_c = sigma_c_estimate(eta_rule(), N)
    eta_a = sigma_a_estimate(eta_rule(), N)
    assert abs(eta_c.value - 0.0) <= 0.05
    assert abs(eta_a.value - 1.0) <= 0.02
    shifted_a = sigma_a_estimate(zeta_shift_rule(2), N)
    assert abs(shifted_a.value - (-1.0)) <= 0.05
    assert shifted_a.shift >= 1
    assert time.perf_counter() - t0 < 5.0


def test_truncated_zeta_two_reproduces_basel_value():
    t0 = time.perf_counter()
    rule = zeta_shift_rule(2)
    M, tb = truncation_for_tolerance(rule, 0.0, 1e-8)
    assert tb.bound <= 1e-8
    value = partial_sum(rule, 0, M)
    basel = math.pi**2 / 6.0
    assert value.imag == 0.0
    assert abs(value.real - basel) <= 1e-8
    assert time.perf_counter() - t0 < 1.0


def test_seminorm_monomial_and_two_term_lower_bound():
    f = monomial(2)
    for eps in (0.0, 0.5, 1.0):
        est = seminorm(f, eps)
        want = 2.0**-eps
        assert abs(est.lower - want) <= 1e-12 * want
        assert abs(est.upper - want) <= 1e-12 * want
    two_term = monomial(1) - monomial(2)
    est = seminorm(two_term, 0.0)
    assert abs(est.lower - 2.0) <= 1e-3
    assert est.upper == 2.0


def test_spectral_gap_window_matches_brute_force():
    rng = np.random.default_rng(1212)
    logs = np.log(np.arange(2, 10**6 + 1, dtype=np.float64))
    for _ in range(100):
        lam = complex(rng.uniform(-10.0, 3.0), rng.uniform(-5.0, 5.0))
        d2 = (logs + lam.real) ** 2 + lam.imag**2
        brute = min(abs(lam), math.sqrt(float(d2.min())))
        got = spectral_gap(lam)
        assert got == brute or abs(got - brute) <= 1e-12
