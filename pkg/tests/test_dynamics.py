import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dirichlet_ops import (
    DirichletPolynomial,
    DomainError,
    Multiplier,
    add,
    apply,
    cesaro_mean,
    coefficient_close,
    derivative_multiplier,
    ergodicity_diagnostic,
    identity_multiplier,
    integration_multiplier,
    monomial,
    normalized_power_norm,
    power_apply,
    scale,
    seminorm,
)

from conftest import poly_strategy

LOG_LOG_3 = 0.09404782761669901


class TestPowerApply:
    @pytest.mark.parametrize("k", [1, 2, 7, 25])
    def test_derivative_iterates_on_monomial(self, k):
        got = power_apply(derivative_multiplier(), k, monomial(3))
        want = (-math.log(3)) ** k
        assert got.coefficient(3) == pytest.approx(want, rel=1e-13)
        assert got.term_count == 1

    @pytest.mark.parametrize("k", [1, 3, 12])
    def test_integration_iterates_on_monomial(self, k):
        got = power_apply(integration_multiplier(), k, monomial(2))
        want = (-1.0 / math.log(2)) ** k
        assert got.coefficient(2) == pytest.approx(want, rel=1e-14)

    def test_first_power_is_plain_apply(self):
        f = add(monomial(2), scale(2.0, monomial(9)))
        assert power_apply(derivative_multiplier(), 1, f) == apply(
            derivative_multiplier(), f
        )

    @pytest.mark.parametrize("bad", [0, -3, 2.5])
    def test_power_validated(self, bad):
        with pytest.raises(DomainError):
            power_apply(identity_multiplier(), bad, monomial(2))

    def test_constraint_checked(self):
        with pytest.raises(DomainError):
            power_apply(integration_multiplier(), 2, monomial(1))

    @given(
        poly_strategy(max_index=64, max_terms=4),
        st.integers(1, 15),
        st.integers(1, 15),
    )
    def test_power_additivity(self, f, j, k):
        # |symbol| of the derivative on n <= 64 is log 64 < 4.2, but the
        # additivity contract is stated for |symbol| <= 2; clamp with a
        # bounded custom symbol instead
        m = Multiplier(lambda n: 2.0 / (1.0 + 1.0 / n) * cmathless(n), "bounded")
        lhs = power_apply(m, j + k, f)
        rhs = power_apply(m, j, power_apply(m, k, f))
        assert coefficient_close(lhs, rhs, rtol=1e-10, atol=1e-12)


def cmathless(n: int) -> complex:
    # deterministic unit-modulus phase, exercising complex powers
    return complex(math.cos(0.1 * n), math.sin(0.1 * n))


class TestCesaroMean:
    @pytest.mark.parametrize("k", [1, 2, 10, 50])
    def test_identity_symbol_fixed_point(self, k):
        f = add(monomial(1, 2.0), monomial(6, -1.5))
        assert cesaro_mean(identity_multiplier(), k, f) == f

    def test_contracting_orbit_bound(self):
        g = math.log(2)
        for k in (1, 5, 25, 50):
            mean = cesaro_mean(derivative_multiplier(), k, monomial(2))
            bound = (1.0 / k) * g / (1.0 - g)
            assert abs(mean.coefficient(2)) <= bound * (1 + 1e-12)

    def test_five_term_direct_sum(self):
        got = cesaro_mean(derivative_multiplier(), 5, monomial(3))
        want = math.fsum((-math.log(3)) ** m for m in range(1, 6)) / 5.0
        assert got.coefficient(3) == pytest.approx(want, rel=1e-12)

    @pytest.mark.parametrize("k", [1, 2, 13, 50])
    def test_closed_form_matches_direct_summation(self, k):
        f = DirichletPolynomial({2: 1.0, 3: -2.0, 10: 0.5j})
        for m in (derivative_multiplier(), integration_multiplier()):
            got = cesaro_mean(m, k, f)
            acc = DirichletPolynomial({})
            for j in range(1, k + 1):
                acc = add(acc, power_apply(m, j, f))
            want = scale(1.0 / k, acc)
            assert coefficient_close(got, want, rtol=1e-10, atol=1e-12)

    def test_near_unit_symbol_cancellation_guard(self):
        m = Multiplier(lambda n: 1.0 + 1e-12, "near-one")
        got = cesaro_mean(m, 40, monomial(2))
        # all forty iterates are within 4e-11 of the original coefficient
        assert got.coefficient(2) == pytest.approx(1.0, abs=1e-9)

    def test_unit_symbol_exact(self):
        m = Multiplier(lambda n: 1.0, "unit")
        f = monomial(2, 3.25)
        assert cesaro_mean(m, 17, f) == f


class TestNormalizedPowerNorm:
    @pytest.mark.parametrize("eps", [0.1, 1.0])
    @pytest.mark.parametrize("k", [1, 2, 10, 25, 40])
    def test_derivative_witness_closed_form(self, eps, k):
        got = normalized_power_norm(derivative_multiplier(), monomial(3), eps, k)
        want = math.log(3) ** k / (k * 3**eps)
        assert got == pytest.approx(want, rel=1e-9)

    @pytest.mark.parametrize("eps", [0.1, 1.0])
    @pytest.mark.parametrize("k", [1, 2, 10, 25, 40])
    def test_integration_witness_closed_form(self, eps, k):
        got = normalized_power_norm(integration_multiplier(), monomial(2), eps, k)
        want = 1.0 / (k * math.log(2) ** k * 2**eps)
        assert got == pytest.approx(want, rel=1e-9)

    def test_contracting_witness_decreases(self):
        vals = [
            normalized_power_norm(derivative_multiplier(), monomial(2), 0.1, k)
            for k in range(1, 41)
        ]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_monomial_matches_seminorm_upper(self):
        for k in (1, 3, 17):
            f = monomial(3, 2.0 - 1.0j)
            got = normalized_power_norm(derivative_multiplier(), f, 0.5, k)
            scaled = scale(1.0 / k, power_apply(derivative_multiplier(), k, f))
            want = seminorm(scaled, 0.5, t_max=1.0, step=1.0).upper
            assert got == pytest.approx(want, rel=1e-12)

    def test_overflow_guard_returns_inf(self):
        m = Multiplier(lambda n: 1e6, "huge")
        assert normalized_power_norm(m, monomial(2), 0.0, 60) == math.inf


class TestDiagnostic:
    def test_growing_derivative_witness(self):
        report = ergodicity_diagnostic(derivative_multiplier(), monomial(3), 0.1, 40)
        assert report.verdict == "diverges"
        assert report.fitted_rate == pytest.approx(LOG_LOG_3, abs=1e-3)

    def test_growing_integration_witness(self):
        report = ergodicity_diagnostic(integration_multiplier(), monomial(2), 0.1, 40)
        assert report.verdict == "diverges"
        assert report.fitted_rate == pytest.approx(math.log(1 / math.log(2)), abs=1e-3)

    def test_contracting_witness(self):
        report = ergodicity_diagnostic(derivative_multiplier(), monomial(2), 0.1, 40)
        assert report.verdict == "converges"

    @pytest.mark.parametrize("eps", [0.1, 0.5, 1.0])
    def test_witness_verdicts_across_epsilons(self, eps):
        d = ergodicity_diagnostic(derivative_multiplier(), monomial(3), eps, 40)
        j = ergodicity_diagnostic(integration_multiplier(), monomial(2), eps, 40)
        assert d.verdict == "diverges"
        assert j.verdict == "diverges"

    def test_samples_cover_every_k(self):
        report = ergodicity_diagnostic(derivative_multiplier(), monomial(3), 0.1, 17)
        assert [k for k, _ in report.samples] == list(range(1, 18))

    def test_zero_orbit_converges(self):
        report = ergodicity_diagnostic(
            derivative_multiplier(), DirichletPolynomial({}), 0.1, 12
        )
        assert report.verdict == "converges"

    def test_identity_orbit_inconclusive(self):
        report = ergodicity_diagnostic(identity_multiplier(), monomial(2), 0.1, 20)
        assert report.verdict == "inconclusive"

    def test_overflowing_orbit_diverges(self):
        m = Multiplier(lambda n: 1e9, "huge")
        report = ergodicity_diagnostic(m, monomial(2), 0.1, 45)
        assert report.verdict == "diverges"

    def test_k_max_validated(self):
        with pytest.raises(DomainError):
            ergodicity_diagnostic(derivative_multiplier(), monomial(3), 0.1, 9)
