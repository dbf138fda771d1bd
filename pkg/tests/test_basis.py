"""Trigonometric basis, discrete inner product, and Fourier coefficients."""

import math

import numpy as np
import pytest

from tvarseq.basis import FourierCoeffs, TrigBasis, fourier_coefficients, trig_fn


class TestBasisEval:
    def test_constant(self):
        basis = TrigBasis(0.0, 1.0, 15)
        for x in (0.0, 0.3, 1.0):
            assert basis.eval(1, x) == pytest.approx(1.0, abs=1e-15)

    def test_cosine_branch(self):
        basis = TrigBasis(0.0, 1.0, 15)
        assert basis.eval(2, 0.0) == pytest.approx(math.sqrt(2), abs=1e-14)

    def test_sine_branch(self):
        basis = TrigBasis(0.0, 1.0, 15)
        assert basis.eval(3, 0.25) == pytest.approx(math.sqrt(2), abs=1e-14)

    def test_out_of_range_j(self):
        basis = TrigBasis(0.0, 1.0, 5)
        with pytest.raises(IndexError):
            basis.eval(6, 0.5)

    def test_general_interval(self):
        # normalization scales with the interval length
        basis = TrigBasis(1.0, 3.0, 5)
        assert basis.eval(1, 2.0) == pytest.approx(1.0 / math.sqrt(2), abs=1e-14)
        assert basis.eval(2, 1.0) == pytest.approx(1.0, abs=1e-14)  # sqrt(2/2)*cos 0

    def test_trig_fn_matches_basis(self):
        basis = TrigBasis(0.0, 1.0, 15)
        x = np.linspace(0.0, 1.0, 7)
        for j in (1, 2, 3, 8, 15):
            np.testing.assert_allclose(trig_fn(j, x), basis.eval(j, x), atol=1e-14)


class TestInnerProduct:
    def test_normalization(self):
        basis = TrigBasis(0.0, 1.0, 15)
        f = basis.phi[:, 0]
        assert basis.inner(f, f) == pytest.approx(1.0, abs=1e-12)

    def test_cross_orthogonality(self):
        basis = TrigBasis(0.0, 1.0, 15)
        assert abs(basis.inner(basis.phi[:, 1], basis.phi[:, 2])) < 1e-10

    def test_constant_one(self):
        basis = TrigBasis(0.0, 1.0, 15)
        ones = np.ones(15)
        assert basis.inner(ones, ones) == pytest.approx(1.0, abs=1e-14)

    def test_shape_error(self):
        basis = TrigBasis(0.0, 1.0, 15)
        with pytest.raises(ValueError):
            basis.inner(np.ones(15), np.ones(14))

    @pytest.mark.parametrize("d", [5, 15, 201])
    def test_gram_identity(self, d):
        basis = TrigBasis(0.0, 1.0, d)
        assert np.max(np.abs(basis.gram() - np.eye(d))) < 1e-10

    def test_gram_identity_shifted_interval(self):
        basis = TrigBasis(-1.0, 2.0, 31)
        assert np.max(np.abs(basis.gram() - np.eye(31))) < 1e-10


class TestFourierCoefficients:
    def test_constant_signal(self):
        basis = TrigBasis(0.0, 1.0, 15)
        c = fourier_coefficients(basis, np.full(15, 0.7), np.zeros(15))
        assert c.theta_hat[0] == pytest.approx(0.7, abs=1e-12)
        assert np.max(np.abs(c.theta_hat[1:])) < 1e-12

    def test_pure_mode(self):
        basis = TrigBasis(0.0, 1.0, 15)
        c = fourier_coefficients(basis, basis.phi[:, 1], np.zeros(15))
        assert c.theta_hat[1] == pytest.approx(1.0, abs=1e-12)
        mask = np.ones(15, dtype=bool)
        mask[1] = False
        assert np.max(np.abs(c.theta_hat[mask])) < 1e-12

    def test_constant_variance_proxy(self):
        basis = TrigBasis(0.0, 1.0, 15)
        v = 0.031
        c = fourier_coefficients(basis, np.zeros(15), np.full(15, v))
        np.testing.assert_allclose(c.s_jd, v, atol=1e-14)

    def test_s_jd_convex_range(self, rng):
        basis = TrigBasis(0.0, 1.0, 21)
        sigma2 = rng.uniform(0.01, 0.05, 21)
        c = fourier_coefficients(basis, np.zeros(21), sigma2)
        assert np.all(c.s_jd >= sigma2.min() - 1e-14)
        assert np.all(c.s_jd <= sigma2.max() + 1e-14)

    def test_parseval_and_reconstruction(self, rng):
        d = 41
        basis = TrigBasis(0.0, 1.0, d)
        Y = rng.normal(size=d)
        c = fourier_coefficients(basis, Y, np.zeros(d))
        norm_d = float(Y @ Y) / d
        assert float(c.theta_hat @ c.theta_hat) == pytest.approx(norm_d, rel=1e-9)
        recon = basis.phi @ c.theta_hat
        np.testing.assert_allclose(recon, Y, atol=1e-8)

    def test_noiseless_decomposition(self, s1, ctx_1000):
        # with Y the true signal on the grid, theta_hat equals (S, phi_j)_d
        from tvarseq.pipeline import signal_values_on_grid
        basis = ctx_1000.basis
        S_grid = signal_values_on_grid(s1, ctx_1000.part)
        c = fourier_coefficients(basis, S_grid, np.zeros(len(S_grid)))
        direct = np.array([basis.inner(S_grid, basis.phi[:, j]) for j in range(basis.d)])
        np.testing.assert_allclose(c.theta_hat, direct, atol=1e-12)
