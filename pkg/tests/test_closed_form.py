"""Closed-form probe quantities.

Frozen expected values below were computed once with mpmath at 50 digits
from the printed formulas, with ``1 - eta`` evaluated directly.
"""

import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from entangling_probe import closed_form as cf
from entangling_probe.closed_form import DomainError, ErrorRate, ProbeVector

rates = st.floats(min_value=0.0, max_value=1.0 / 3.0, allow_nan=False)
R2 = math.sqrt(2.0)


class TestErrorRate:
    @pytest.mark.parametrize("v", [0, 0.1, 0.25, 1 / 3])
    def test_accepts_range(self, v):
        assert ErrorRate(v).value == v

    @pytest.mark.parametrize("v", [-1e-18, 0.34, 0.5, float("nan"), float("inf"), "abc"])
    def test_rejects_outside(self, v):
        with pytest.raises(DomainError):
            ErrorRate(v)

    def test_functions_validate(self):
        with pytest.raises(DomainError):
            cf.renyi_info(0.4)


class TestSgn:
    @pytest.mark.parametrize("x, expected", [(0.5, 1), (0.0, 0), (-0.0, 0), (-2.0, -1)])
    def test_values(self, x, expected):
        assert cf.sgn(x) == expected

    def test_rejects_nan(self):
        with pytest.raises(DomainError):
            cf.sgn(float("nan"))


class TestEta:
    def test_zero(self):
        assert cf.eta(0) == 0.0

    def test_quarter(self):
        assert cf.eta(0.25) == 1.0

    def test_tenth(self):
        assert cf.eta(0.1) == pytest.approx(0.8, abs=1e-15)

    @given(rates)
    def test_in_unit_interval(self, e):
        assert 0.0 <= cf.eta(e) <= 1.0


class TestMuComponents:
    def test_zero(self):
        mu = cf.mu_components(0)
        assert mu.cos_mu == pytest.approx(1 / R2, abs=1e-15)
        assert mu.sin_mu == pytest.approx(1 / R2, abs=1e-15)

    def test_quarter(self):
        mu = cf.mu_components(0.25)
        assert (mu.cos_mu, mu.sin_mu) == (1.0, 0.0)

    def test_point_three(self):
        mu = cf.mu_components(0.3)
        assert mu.cos_mu == pytest.approx(0.99493615300512405274, abs=1e-14)
        assert mu.sin_mu == pytest.approx(-0.10050896200520817418, abs=1e-14)

    @given(rates)
    def test_unit_and_sign(self, e):
        mu = cf.mu_components(e)
        assert mu.cos_mu**2 + mu.sin_mu**2 == pytest.approx(1.0, abs=1e-12)
        assert mu.cos_mu >= 0
        assert cf.sgn(mu.sin_mu) == cf.sgn(1 - 4 * e)


class TestProbeBasisStates:
    def test_zero_equal(self):
        a1, a2 = cf.probe_basis_states(0)
        assert a1 == a2
        assert a1.w0 == pytest.approx(1 / R2, abs=1e-15)

    def test_quarter(self):
        a1, a2 = cf.probe_basis_states(0.25)
        assert (a1.w0, a1.w3, a2.w0, a2.w3) == (1.0, 0.0, 0.0, 1.0)

    def test_tenth(self):
        _, a2 = cf.probe_basis_states(0.1)
        assert a2.w0 == pytest.approx(0.3162277660168379332, abs=1e-14)
        assert a2.w3 == pytest.approx(0.9486832980505137996, abs=1e-14)

    def test_unit_norm_on_grid(self, grid):
        for e in grid:
            a1, a2 = cf.probe_basis_states(e)
            assert abs(a1.norm() - 1) <= 1e-12 and abs(a2.norm() - 1) <= 1e-12


class TestCorrelatedStates:
    def test_zero(self):
        s = cf.correlated_states(0)
        assert s.alpha_plus.w0 == pytest.approx(2 * R2, abs=1e-14)
        assert s.alpha_plus.w3 == pytest.approx(2 * R2, abs=1e-14)
        assert s.alpha_minus == s.alpha_plus
        assert s.alpha == ProbeVector(0.0, 0.0)

    def test_quarter(self):
        s = cf.correlated_states(0.25)
        assert s.alpha_plus.w0 == pytest.approx(R2 * (R2 + 1), abs=1e-14)
        assert s.alpha_plus.w3 == pytest.approx(R2 * (R2 - 1), abs=1e-14)
        assert s.alpha_minus == s.alpha_plus.swapped()
        assert s.alpha.w0 == pytest.approx(-R2, abs=1e-14)
        assert s.alpha.w3 == pytest.approx(R2, abs=1e-14)

    @pytest.mark.parametrize(
        "e, plus, alpha",
        [
            (0.1, (3.4242493191346193442, 1.635394937134787587), (-0.89442719099991587856, 0.89442719099991587856)),
            (0.3, (3.3380477204827985112, 0.23966104351686500306), (-1.5491933384829667541, 1.5491933384829667541)),
        ],
    )
    def test_frozen_components(self, e, plus, alpha):
        s = cf.correlated_states(e)
        np.testing.assert_allclose(s.alpha_plus.as_array(), plus, atol=1e-13)
        np.testing.assert_allclose(s.alpha_minus.as_array(), plus[::-1], atol=1e-13)
        np.testing.assert_allclose(s.alpha.as_array(), alpha, atol=1e-13)

    def test_third_orthogonal(self):
        s = cf.correlated_states(1 / 3)
        assert abs(s.alpha_plus.dot(s.alpha_minus)) <= 1e-12

    def test_norms_on_grid(self, grid):
        for e in grid:
            s = cf.correlated_states(e)
            assert abs(s.alpha_plus.norm_sq() - 16 * (1 - e)) <= 1e-12
            assert abs(s.alpha_minus.norm_sq() - 16 * (1 - e)) <= 1e-12
            assert abs(s.alpha.norm_sq() - 16 * e) <= 1e-12

    def test_swap_symmetry_bitwise(self, grid):
        for e in grid:
            s = cf.correlated_states(e)
            assert s.alpha_plus.swapped() == s.alpha_minus

    def test_normalize_alpha_at_zero_is_error(self):
        with pytest.raises(DomainError):
            cf.correlated_states(0).normalized("alpha")

    def test_normalized(self):
        v = cf.correlated_states(0.2).normalized("alpha")
        assert v.norm() == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("delta", [1e-11, 1e-12, 1e-13])
    def test_continuous_across_quarter(self, delta):
        lo, mid, hi = (cf.correlated_states(0.25 + d) for d in (-delta, 0.0, delta))
        for name in ("a1", "a2", "alpha_plus", "alpha_minus", "alpha"):
            for side in (lo, hi):
                np.testing.assert_allclose(
                    getattr(side, name).as_array(), getattr(mid, name).as_array(), rtol=0, atol=1e-9
                )


class TestSymbolicOracle:
    """Norm and overlap identities by symbolic expansion, independent of the float code.

    ``a = sqrt(1 + eta)``, ``b = sqrt(1 - eta)`` and ``s = sgn(1 - 4E)``; the
    reduction uses ``a**2 = 1 + eta``, ``b**2 = 1 - eta``, ``s**2 = 1`` and
    ``s*a*b = s*|1 - 4E| = 1 - 4E``.
    """

    E, eta, a, b, s = sp.symbols("E eta a b s", real=True)

    def _reduce(self, expr):
        expr = sp.expand(expr)
        expr = expr.subs({self.a**2: 1 + self.eta, self.b**2: 1 - self.eta, self.s**2: 1})
        expr = sp.expand(expr).subs(self.s * self.a * self.b, 1 - 4 * self.E)
        return sp.simplify(expr)

    def _states(self):
        r2, rp, rm = sp.sqrt(2), self.a, self.s * self.b
        plus = ((r2 + 1) * rp + (r2 - 1) * rm, (r2 + 1) * rm + (r2 - 1) * rp)
        minus = ((r2 - 1) * rp + (r2 + 1) * rm, (r2 - 1) * rm + (r2 + 1) * rp)
        alpha = (rm - rp, rp - rm)
        return plus, minus, alpha

    def test_norms(self):
        plus, minus, alpha = self._states()
        assert self._reduce(plus[0] ** 2 + plus[1] ** 2 - 16 * (1 - self.E)) == 0
        assert self._reduce(minus[0] ** 2 + minus[1] ** 2 - 16 * (1 - self.E)) == 0
        assert self._reduce(alpha[0] ** 2 + alpha[1] ** 2 - 16 * self.E) == 0

    def test_overlap(self):
        plus, minus, _ = self._states()
        inner = self._reduce(plus[0] * minus[0] + plus[1] * minus[1])
        assert sp.simplify(inner / (16 * (1 - self.E)) - (1 - 3 * self.E) / (1 - self.E)) == 0

    def test_one_minus_eta_squared(self):
        eta = sp.sqrt(8 * self.E * (1 - 2 * self.E))
        assert sp.expand(1 - eta**2 - (1 - 4 * self.E) ** 2) == 0


class TestOverlap:
    def test_inner_endpoints(self):
        assert cf.overlap_q_inner(0) == pytest.approx(1.0, abs=1e-15)
        assert cf.overlap_q_inner(0.25) == pytest.approx(1 / 3, abs=1e-15)
        assert abs(cf.overlap_q_inner(1 / 3)) <= 1e-12

    def test_closed_values(self):
        assert cf.overlap_q_closed(0) == 1.0
        assert cf.overlap_q_closed(0.1) == pytest.approx(7 / 9, abs=1e-15)
        assert cf.overlap_q_closed(0.3) == pytest.approx(1 / 7, abs=1e-15)

    def test_two_routes_agree(self, grid):
        diffs = [abs(cf.overlap_q_inner(e) - cf.overlap_q_closed(e)) for e in grid]
        assert max(diffs) <= 1e-12

    def test_strictly_decreasing(self, grid):
        q = np.array([cf.overlap_q_closed(e) for e in grid])
        assert np.all(np.diff(q) < 0)

    @given(rates)
    def test_sign_identity(self, e):
        assert cf.sgn(1 - 4 * e) * abs(1 - 4 * e) == 1 - 4 * e

    def test_sign_identity_at_quarter(self):
        assert cf.sgn(1 - 4 * 0.25) * abs(1 - 4 * 0.25) == 0.0


class TestRenyiInfo:
    def test_zero(self):
        assert cf.renyi_info(0) == 0.0

    def test_third(self):
        assert cf.renyi_info(1 / 3) == pytest.approx(1.0, abs=1e-12)

    def test_quarter(self):
        assert cf.renyi_info(0.25) == pytest.approx(0.91753783980802704535, abs=1e-14)

    def test_strictly_increasing(self, grid):
        info = np.array([cf.renyi_info(e) for e in grid])
        assert np.all(np.diff(info) > 0)
        assert info.min() >= 0 and info.max() <= 1


class TestHelstrom:
    def test_values(self):
        assert cf.helstrom_correct_prob(0) == 0.5
        assert cf.helstrom_correct_prob(1 / 3) == pytest.approx(1.0, abs=1e-15)
        assert cf.helstrom_correct_prob(0.25) == pytest.approx(0.97140452079103168293, abs=1e-14)

    def test_renyi_consistency(self, grid):
        for e in grid:
            p = cf.helstrom_correct_prob(e)
            assert abs(cf.renyi_from_success_prob(p) - cf.renyi_info(e)) <= 1e-12

    @given(rates)
    @settings(max_examples=300)
    def test_w_basis_measurement_attains_bound(self, e):
        s = cf.correlated_states(e)
        p = s.alpha_minus.w3**2 / s.alpha_minus.norm_sq()
        assert p == pytest.approx(cf.helstrom_correct_prob(e), abs=1e-12)
