import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrdynamics.maps import DomainError, MapKind, MapSpec
from qrdynamics.qc import (
    DerivativeSample,
    WindingError,
    default_k_hat,
    derivative_sample,
    estimate_dilatation,
    jacobian_h_analytic,
    jacobian_h_many,
    singular_values,
    winding_degree,
)
from qrdynamics import _kernels as K

entry = st.floats(-100, 100)


@given(entry, entry, entry, entry)
def test_singular_values_match_svd(a, b, c, d):
    smax, smin = singular_values(a, b, c, d)
    ref = np.linalg.svd(np.array([[a, b], [c, d]]), compute_uv=False)
    assert smax == pytest.approx(ref[0], rel=1e-12, abs=1e-12)
    assert smin == pytest.approx(ref[1], rel=1e-9, abs=1e-9)


class TestDerivativeSample:
    def test_affine_branch(self, f_spec):
        s = derivative_sample(f_spec, 0.3 - 0.5j)
        np.testing.assert_allclose(s.matrix, [[2, 0], [0, 0.5]], atol=1e-8)
        assert s.op_norm == pytest.approx(2, rel=1e-8)
        assert s.jac_det == pytest.approx(1, rel=1e-8)
        assert s.local_K == pytest.approx(4, rel=1e-8)
        assert s.reliable

    def test_stretch_far_side(self, h_spec):
        s = derivative_sample(h_spec, 1 + 0.75j)
        assert (s.op_norm, s.jac_det, s.local_K) == pytest.approx((4, 4, 4), rel=1e-8)

    def test_stretch_ramp(self, h_spec):
        s = derivative_sample(h_spec, 0.5 + 0.6j)
        # hand derivative of (6x - 6y + 4) x: d/dx = 12x - 6y + 4, d/dy = -6x
        np.testing.assert_allclose(s.matrix, [[6.4, -3], [0, 1]], atol=1e-7)
        sv = np.linalg.svd(np.array([[6.4, -3.0], [0.0, 1.0]]), compute_uv=False)
        assert s.op_norm == pytest.approx(sv[0], rel=1e-8)
        assert s.local_K == pytest.approx(sv[0] ** 2 / 6.4, rel=1e-8)
        assert s.op_norm == pytest.approx(7.08, abs=0.01)
        assert s.local_K == pytest.approx(7.84, abs=0.01)

    def test_seam_flagged(self, h_spec, f_spec):
        # on the ray |x| = y, and on a dyadic line
        assert not derivative_sample(h_spec, 0.7 + 0.7j).reliable
        assert not derivative_sample(f_spec, 0.1 + 0.25j).reliable
        assert derivative_sample(f_spec, 0.1 + 0.3j).reliable

    def test_local_k_invariant(self):
        s = DerivativeSample.from_matrix(1.0, 2.0, 0.0, 1.0)
        assert s.local_K >= 1
        assert DerivativeSample.from_matrix(1.0, 0.0, 0.0, -1.0).local_K == math.inf

    def test_step_positive(self, f_spec):
        with pytest.raises(ValueError):
            derivative_sample(f_spec, 0j, step=0)


class TestJacobianAnalytic:
    @pytest.mark.parametrize("y, x, expected", [(0.75, 0, 1), (0.6, 0.7, 4), (0.6, 0.5, 6.4)])
    def test_examples(self, y, x, expected):
        j = jacobian_h_analytic(y, x)
        assert j.value == pytest.approx(expected, abs=1e-12)
        assert not j.on_kink

    def test_kink_flag(self):
        j = jacobian_h_analytic(0.625, 0.125)     # diamond edge
        # the outer-side limit 12x - 6y + 4 is reported
        assert j.on_kink and j.value == pytest.approx(1.75)
        assert jacobian_h_analytic(0.625, 0.125 - 1e-9).value == pytest.approx(1.0)
        assert jacobian_h_analytic(0.6, 0.6).on_kink

    def test_domain(self):
        with pytest.raises(DomainError):
            jacobian_h_analytic(0.3, 0.0)

    def test_vectorised_matches_scalar(self):
        rng = np.random.default_rng(0)
        ys = rng.uniform(0.5, 1.0, 2000)
        xs = rng.uniform(-1.5, 1.5, 2000)
        ref = [jacobian_h_analytic(y, x).value for y, x in zip(ys, xs)]
        np.testing.assert_allclose(jacobian_h_many(ys, xs), ref, rtol=1e-14)

    def test_agrees_with_finite_differences(self, h_spec):
        rng = np.random.default_rng(1)
        xs = rng.uniform(-1.2, 1.2, 10_000)
        ys = rng.uniform(0.5, 1.0, 10_000)
        a, flagged = K.difference_matrices(h_spec.kind.code, xs, ys, 5, 0.01, 1e-6)
        good = ~flagged
        assert good.sum() > 9_000
        fd = a[good, 0] * a[good, 3] - a[good, 1] * a[good, 2]
        np.testing.assert_allclose(fd, jacobian_h_many(ys[good], xs[good]), atol=1e-4)


class TestEstimateDilatation:
    def test_stretch_core(self, h_spec):
        rep = estimate_dilatation(h_spec, "h-core", 100_000)
        assert 4 <= rep.sup_op_norm < math.inf
        assert rep.K_hat == max(16, rep.sup_op_norm ** 2)
        assert rep.min_jac_det >= 1 - 1e-6

    def test_dyadic_lower(self, f_spec):
        rep = estimate_dilatation(f_spec, "lower-box", 10_000)
        assert rep.sup_local_K == pytest.approx(4, rel=1e-6)

    def test_degree_disk(self, g_demo):
        rep = estimate_dilatation(g_demo, "unit-disk", 10_000)
        assert rep.sup_local_K == pytest.approx(1, rel=1e-6)

    def test_transcendental_strip_is_quasiregular(self):
        rep = estimate_dilatation(MapSpec.demo("ftilde"), "strip-D", 10_000)
        assert rep.min_jac_det > 0 and rep.sup_local_K < 2

    @pytest.mark.parametrize("kind", list(MapKind))
    def test_local_k_at_least_one(self, kind):
        rep = estimate_dilatation(MapSpec.demo(kind), n=2000)
        assert 1 - 1e-9 <= rep.sup_local_K < math.inf

    def test_deterministic(self, h_spec):
        assert estimate_dilatation(h_spec, n=500) == estimate_dilatation(h_spec, n=500)

    def test_needs_samples(self, h_spec):
        with pytest.raises(ValueError):
            estimate_dilatation(h_spec, n=10)

    def test_default_k_hat_drives_faithful_mode(self):
        k = default_k_hat()
        spec = MapSpec.faithful("p")
        assert spec.k_hat == k and spec.d > 2 * k and spec.d % 2 == 1
        assert spec.d - 2 < 2 * k or (spec.d - 2) % 2 == 0


def root_count_degree(delta, d, target=0.0):
    """Oracle: count preimages of target under g via polynomial roots.

    On |w| > 2, g(w) = w + delta w^d; the inner branches contribute the
    single preimage w = target when |target| <= 1.
    """
    coeffs = np.zeros(d + 1)
    coeffs[0] = delta
    coeffs[d - 1] = 1.0
    coeffs[d] = -target
    roots = np.roots(coeffs)
    outer = int(np.sum(np.abs(roots) > 2))
    inner = 1 if abs(target) <= 1 else 0
    return outer + inner


class TestWinding:
    def test_degree_of_g(self, g_demo):
        assert winding_degree(g_demo, 0, 10, 0, 4096) == 5
        assert root_count_degree(0.01, 5) == 5

    def test_unit_disk_identity(self, g_demo):
        assert winding_degree(g_demo, 0, 0.5, 0, 1024) == 1

    def test_homeomorphism(self, f_spec):
        assert winding_degree(f_spec, 0, 1, 0.01 + 0.01j, 1024) == 1

    @pytest.mark.parametrize("n", [512, 1024, 2048])
    def test_stable_under_doubling(self, p_demo, n):
        assert winding_degree(p_demo, 0, 10, 0, n) == winding_degree(p_demo, 0, 10, 0, 2 * n) == 5

    def test_other_degrees(self):
        # the root oracle holds while the outer zeros lie beyond |w| = 2
        for d in (3, 7):
            spec = MapSpec(MapKind.DEGREE_G, d=d, delta=0.01)
            assert winding_degree(spec, 0, 20, 0, 4096) == d == root_count_degree(0.01, d)
        assert winding_degree(MapSpec(MapKind.DEGREE_G, d=9, delta=0.01), 0, 20, 0, 4096) == 9

    def test_zero_on_contour_detected(self):
        # outer zeros of w + 0.01 w^3 sit exactly on |w| = 10
        with pytest.raises(WindingError):
            winding_degree(MapSpec(MapKind.DEGREE_G, d=3, delta=0.01), 0, 10, 0, 4096)

    def test_target_on_curve(self, g_demo):
        with pytest.raises(WindingError):
            winding_degree(g_demo, 0, 0.5, 0.5, 1024)

    def test_minimum_samples(self, g_demo):
        with pytest.raises(ValueError):
            winding_degree(g_demo, 0, 10, 0, 100)
