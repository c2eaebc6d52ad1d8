"""Unit tests for the polynomial family, weight, and identity residuals."""

import math

import pytest

from qlab import (NonConvergence, OrthoCheckParams, PoleError, QContext,
                  bessel_expansion_residual, bessel_weight_transform,
                  discrete_orthogonality_rhs, hermite_h, hermite_h_scaled,
                  hermite_via_laguerre, integral_representation_residual,
                  moment_check, moment_constant, norm_constants, orthogonality,
                  poisson_kernel_residual, qlaguerre, relation_residual,
                  rogers_ramanujan_residual, weight)

CTX = QContext(q=0.5, alpha=0.25)
GRID = [QContext(q=q, alpha=a) for q in (0.3, 0.5, 0.8)
        for a in (-0.5, 0.25, 1.3)]


class TestPolynomial:
    def test_first_polynomials(self):
        q, a = CTX.q, CTX.alpha
        assert hermite_h(0, 0.7, CTX) == pytest.approx(1.0)
        # degree 1: (1 - q) x / (1 - q^{2a+2}); monic only at a = -1/2
        assert hermite_h(1, 0.7, CTX) == pytest.approx(
            (1 - q) * 0.7 / (1 - q ** (2 * a + 2)))
        assert hermite_h(2, 0.0, CTX) == pytest.approx(-1.0)
        c = QContext(q=q, alpha=-0.5)
        assert hermite_h(1, 0.7, c) == pytest.approx(0.7)

    def test_parity(self):
        for ctx in GRID:
            for n in range(9):
                for x in (0.4, 1.7):
                    assert hermite_h(n, -x, ctx) == pytest.approx(
                        (-1.0) ** n * hermite_h(n, x, ctx), rel=1e-12, abs=1e-12)

    def test_scaled_variant(self):
        for n in range(7):
            want = CTX.q ** (n * n / 2.0) * hermite_h(n, 0.8, CTX)
            assert hermite_h_scaled(n, 0.8, CTX) == pytest.approx(want, rel=1e-10)

    def test_laguerre_route_agrees(self):
        for ctx in GRID:
            for n in range(11):
                a = hermite_h(n, 0.9, ctx)
                b = hermite_via_laguerre(n, 0.9, ctx)
                assert abs(a - b) / (1 + abs(a) + abs(b)) < 1e-12

    def test_qlaguerre_value_at_zero(self):
        # base q^2: L_n^{(a)}(0; q^2) = (q^{2a+2}; q^2)_n / (q^2; q^2)_n
        from qlab import qpoch
        q, a = 0.5, 0.75
        ctx = QContext(q=q)
        ctx2 = QContext(q=q * q)
        for n in range(6):
            want = (qpoch(q ** (2 * a + 2), n, ctx2)
                    / qpoch(q * q, n, ctx2))
            assert qlaguerre(n, a, 0.0, ctx) == pytest.approx(want, rel=1e-12)


class TestWeight:
    def test_positive_and_even(self):
        for x in (0.0, 0.3, 1.2, 4.0):
            w = weight(x, CTX)
            assert w > 0.0
            assert weight(-x, CTX) == pytest.approx(w)

    def test_rapid_decay(self):
        # 1/(z; q^2)_inf decay accelerates with |x|: log-convex falloff
        w = [weight(x, CTX) for x in (0.5, 4.0, 8.0, 16.0)]
        assert w[0] > w[1] > w[2] > w[3]
        assert w[3] < 1e-8 * w[0]

    def test_moment_constant_finite_at_integer_alpha(self):
        assert math.isfinite(moment_constant(QContext(q=0.5, alpha=1.0)))

    def test_big_c_pole_at_integer_alpha(self):
        with pytest.raises(PoleError):
            norm_constants(2, QContext(q=0.5, alpha=1.0))

    def test_moments(self):
        for ctx in GRID:
            for n in range(5):
                assert moment_check(n, ctx) < 1e-10


class TestRelations:
    @pytest.mark.parametrize("kind", ["generating", "inversion",
                                      "forward_shift", "backward_shift",
                                      "qdiff", "rodrigues"])
    def test_relation_residuals(self, kind):
        for ctx in GRID:
            for n in range(7):
                for x in (0.3, -0.7, 1.5):
                    assert relation_residual(kind, n, x, ctx) < 1e-10, \
                        (kind, ctx.q, ctx.alpha, n, x)


class TestOrthogonality:
    def test_discrete_offdiagonal(self):
        for n in range(7):
            for m in range(n + 1, 7):
                r = orthogonality(OrthoCheckParams(n, m, "discrete_jackson"), CTX)
                assert r.residual < 1e-12

    def test_discrete_diagonal_closed_form(self):
        for n in range(7):
            r = orthogonality(OrthoCheckParams(n, n, "discrete_jackson"), CTX)
            assert r.residual < 1e-10
            assert discrete_orthogonality_rhs(n, CTX) > 0.0

    def test_continuous_offdiagonal(self):
        for (n, m) in ((0, 2), (1, 3), (2, 4)):
            r = orthogonality(OrthoCheckParams(n, m, "continuous_quadrature"), CTX)
            assert r.residual < 1e-6

    def test_continuous_diagonal_constant_in_n(self):
        values = []
        for n in range(4):
            r = orthogonality(OrthoCheckParams(n, n, "continuous_quadrature"), CTX)
            values.append(r.params["value"])
        for v in values[1:]:
            assert v == pytest.approx(values[0], abs=1e-6)

    def test_continuous_diagonal_unity_at_classical_alpha(self):
        ctx = QContext(q=0.5, alpha=-0.5)
        for n in range(4):
            r = orthogonality(OrthoCheckParams(n, n, "continuous_quadrature"), ctx)
            assert r.params["value"] == pytest.approx(1.0, abs=1e-6)


class TestTransformsAndKernels:
    def test_bessel_weight_transform_inside_disc(self):
        for ctx in GRID:
            lim = ctx.q ** (ctx.alpha + 0.5)
            assert bessel_weight_transform(0.4 * lim, ctx) < 1e-9

    def test_bessel_weight_transform_outside_disc_raises(self):
        with pytest.raises(NonConvergence):
            bessel_weight_transform(1.5, QContext(q=0.6, alpha=1.0))

    def test_integral_representation_inside_disc(self):
        for ctx in GRID:
            x = 0.5 * ctx.q ** (ctx.alpha + 0.5)
            for n in range(5):
                assert integral_representation_residual(n, x, ctx) < 1e-8

    def test_integral_representation_outside_disc_raises(self):
        with pytest.raises(NonConvergence):
            integral_representation_residual(2, 1.5, CTX)

    def test_poisson_kernel(self):
        for ctx in GRID:
            for (x, y) in ((0.8, 0.3), (1.2, 0.5)):
                assert poisson_kernel_residual(x, y, "general", ctx) < 1e-10

    def test_poisson_corollary_classical_alpha(self):
        ctx = QContext(q=0.5, alpha=-0.5)
        assert poisson_kernel_residual(0.8, 0.3, "half_integer_corollary",
                                       ctx) < 1e-10

    def test_bessel_expansion(self):
        for ctx in GRID:
            for x in (0.5, 1.2):
                assert bessel_expansion_residual(x, ctx) < 1e-10

    def test_rogers_ramanujan(self):
        for ctx in GRID:
            assert rogers_ramanujan_residual(ctx) < 1e-12
