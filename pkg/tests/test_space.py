import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from banach_ortho.space import (
    PNormSpace,
    ScalarField,
    apply_functional,
    bj_minimize,
    dual_norm,
    golden_section,
    inverse_duality,
    is_bj_orthogonal,
    is_bj_orthogonal_smooth,
    is_isosceles_orthogonal,
    norm_attainment_direction,
    p_norm,
    space_properties,
    support_functional,
)

L2 = PNormSpace(2, 2)
L3 = PNormSpace(2, 3)


def lp_rows(V, p):
    """Row-wise l_p norms, straight from the definition."""
    A = np.abs(V)
    return A.max(axis=-1) if math.isinf(p) else (A**p).sum(axis=-1) ** (1 / p)


def grid_oracle(x, y, p, radius, complex_=False, num=400001):
    """Brute-force min over lam of ||x + lam y|| on a dense grid."""
    if complex_:
        t = np.linspace(-radius, radius, 1201)
        lam = (t[:, None] + 1j * t[None, :]).ravel()
    else:
        lam = np.linspace(-radius, radius, num)
    vals = lp_rows(x[None, :] + lam[:, None] * y[None, :], p)
    i = int(np.argmin(vals))
    return lam[i], vals[i]


class TestSpaceType:
    def test_dual_exponent(self):
        assert PNormSpace(3, 2).q == 2
        assert PNormSpace(3, 3).q == pytest.approx(1.5)
        assert PNormSpace(3, 1).q == math.inf
        assert PNormSpace(3, math.inf).q == 1

    @pytest.mark.parametrize("n, p", [(0, 2), (2, 0.5), (1.5, 2), (2, float("nan"))])
    def test_rejects_bad_parameters(self, n, p):
        with pytest.raises(ValueError):
            PNormSpace(n, p)

    def test_field_from_string(self):
        assert PNormSpace(2, 2, "complex").field is ScalarField.COMPLEX


class TestNorm:
    def test_pythagoras(self):
        assert p_norm(L2, [3, 4]) == pytest.approx(5)

    def test_max_norm(self):
        assert p_norm(PNormSpace(2, math.inf), [1, -7]) == 7

    def test_l3(self):
        assert p_norm(L3, [1, 2]) == pytest.approx(9 ** (1 / 3), rel=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            p_norm(L2, [1, 2, 3])

    def test_complex_entries_in_real_space(self):
        with pytest.raises(ValueError):
            p_norm(L2, [1j, 0])

    def test_no_overflow(self):
        assert p_norm(PNormSpace(2, 50), [1e300, 1e300]) == pytest.approx(1e300 * 2 ** (1 / 50))

    @given(
        st.lists(st.floats(-1e3, 1e3), min_size=3, max_size=3),
        st.lists(st.floats(-1e3, 1e3), min_size=3, max_size=3),
        st.sampled_from([1, 1.5, 2, 3, math.inf]),
        st.floats(-10, 10),
    )
    def test_norm_axioms(self, x, y, p, a):
        sp = PNormSpace(3, p)
        x, y = np.array(x), np.array(y)
        assert p_norm(sp, x + y) <= p_norm(sp, x) + p_norm(sp, y) + 1e-9 * (1 + p_norm(sp, x) + p_norm(sp, y))
        assert p_norm(sp, a * x) == pytest.approx(abs(a) * p_norm(sp, x), rel=1e-12, abs=1e-300)


class TestDuality:
    def test_support_functional_l2(self):
        np.testing.assert_allclose(support_functional(L2, [3, 4]), [0.6, 0.8])

    def test_support_functional_l3(self):
        f = support_functional(L3, [1, 2])
        np.testing.assert_allclose(f, [9 ** (-2 / 3), 4 * 9 ** (-2 / 3)], rtol=1e-14)
        assert apply_functional(f, [1, 2]) == pytest.approx(9 ** (1 / 3))
        assert dual_norm(L3, f) == pytest.approx(1)

    def test_support_functional_complex(self):
        f = support_functional(PNormSpace(1, 2, "complex"), [1j])
        np.testing.assert_allclose(f, [-1j])

    @pytest.mark.parametrize("p", [1, math.inf])
    def test_nonsmooth_rejected(self, p):
        with pytest.raises(ValueError):
            support_functional(PNormSpace(2, p), [1, 2])
        with pytest.raises(ValueError):
            inverse_duality(PNormSpace(2, p), [1, 2])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            support_functional(L3, [0, 0])
        with pytest.raises(ValueError):
            inverse_duality(L3, [0, 0])

    def test_inverse_duality_self_dual(self):
        np.testing.assert_allclose(inverse_duality(L2, [0.6, 0.8]), [0.6, 0.8])

    def test_inverse_duality_l3(self):
        z = inverse_duality(L3, [1, 4])
        np.testing.assert_allclose(z, np.array([1, 2]) / 9 ** (1 / 3), rtol=1e-14)
        # Hoelder equality
        assert abs(apply_functional([1, 4], z)) == pytest.approx((1 + 4**1.5) ** (2 / 3))

    def test_norm_attainment_matches_inverse_duality(self, rng):
        sp = PNormSpace(4, 1.7, "complex")
        f = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        np.testing.assert_array_equal(norm_attainment_direction(sp, f), inverse_duality(sp, f))

    @settings(max_examples=200)
    @given(
        st.integers(1, 6),
        st.floats(1.05, 8),
        st.booleans(),
        st.integers(0, 2**32 - 1),
    )
    def test_round_trip(self, n, p, cplx, seed):
        r = np.random.default_rng(seed)
        sp = PNormSpace(n, p, "complex" if cplx else "real")
        x = r.standard_normal(n) + (1j * r.standard_normal(n) if cplx else 0)
        z = inverse_duality(sp, support_functional(sp, x))
        np.testing.assert_allclose(z, x / p_norm(sp, x), atol=1e-10)


class TestGoldenSection:
    def test_quadratic(self):
        t, v = golden_section(lambda s: (s - 0.3) ** 2 + 1, -2, 2, 1e-12)
        assert t == pytest.approx(0.3, abs=1e-6)
        assert v == pytest.approx(1)

    def test_endpoint_minimum(self):
        t, v = golden_section(lambda s: s, 0, 1, 1e-12)
        assert t == 0 and v == 0


class TestBJ:
    def test_already_orthogonal(self):
        lam, m = bj_minimize(L2, [1, 0], [0, 1])
        assert lam == 0 and m == 1

    def test_projection(self):
        lam, m = bj_minimize(L2, [1, 1], [0, 1])
        assert lam == pytest.approx(-1, abs=1e-6)
        assert m == pytest.approx(1, abs=1e-12)

    def test_l3_strict_decrease_matches_grid(self):
        x, y = np.array([1.0, 2.0]), np.array([2.0, -1.0])
        lam, m = bj_minimize(L3, x, y)
        lam_o, m_o = grid_oracle(x, y, 3, 1.0)
        assert m < 9 ** (1 / 3)
        assert m == pytest.approx(m_o, abs=1e-9)
        assert lam == pytest.approx(lam_o, abs=1e-4)

    def test_complex_matches_grid(self, rng):
        sp = PNormSpace(3, 3, "complex")
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        lam, m = bj_minimize(sp, x, y)
        radius = 2 * p_norm(sp, x) / p_norm(sp, y)
        _, m_o = grid_oracle(x, y, 3, radius, complex_=True)
        assert m <= m_o + 1e-12
        assert m == pytest.approx(m_o, rel=1e-4)

    @pytest.mark.parametrize("p", [1, math.inf])
    def test_nonsmooth_matches_grid(self, rng, p):
        sp = PNormSpace(3, p)
        x, y = rng.standard_normal(3), rng.standard_normal(3)
        _, m = bj_minimize(sp, x, y)
        _, m_o = grid_oracle(x, y, p, 2 * p_norm(sp, x) / p_norm(sp, y))
        assert m == pytest.approx(m_o, abs=1e-4)
        assert m <= m_o + 1e-12

    def test_zero_y(self):
        with pytest.raises(ValueError):
            bj_minimize(L2, [1, 0], [0, 0])

    def test_verdicts(self):
        assert is_bj_orthogonal(L2, [1, 0], [0, 1]).verdict
        r = is_bj_orthogonal(L3, [1, 2], [2, -1])
        assert not r.verdict and r.gap > 0.01
        assert apply_functional(support_functional(L3, [1, 2]), [2, -1]) * 9 ** (2 / 3) == pytest.approx(-2)

    @given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3))
    def test_rotation_orthogonal_in_l2(self, a, b):
        if math.hypot(a, b) < 1e-6:
            return
        assert is_bj_orthogonal(L2, [a, b], [b, -a]).verdict

    def test_zero_x_rejected(self):
        with pytest.raises(ValueError):
            is_bj_orthogonal(L2, [0, 0], [1, 0])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.sampled_from([1.2, 2.0, 3.0]), st.booleans(), st.booleans())
    def test_minimization_agrees_with_functional(self, seed, p, cplx, kernel):
        r = np.random.default_rng(seed)
        fld = "complex" if cplx else "real"
        sp = PNormSpace(3, p, fld)
        x = r.standard_normal(3) + (1j * r.standard_normal(3) if cplx else 0)
        y = r.standard_normal(3) + (1j * r.standard_normal(3) if cplx else 0)
        if kernel:
            f = support_functional(sp, x)
            y = y - apply_functional(f, y) / np.vdot(f.conj(), f.conj()) * f.conj()
        assert is_bj_orthogonal(sp, x, y).verdict == is_bj_orthogonal_smooth(sp, x, y).verdict

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.floats(0.01, 100), st.floats(0.01, 100), st.booleans())
    def test_homogeneity(self, seed, a, b, kernel):
        r = np.random.default_rng(seed)
        sp = PNormSpace(3, 3)
        x, y = r.standard_normal(3), r.standard_normal(3)
        if kernel:
            f = support_functional(sp, x)
            y = y - (f @ y) / (f @ f) * f
        assert is_bj_orthogonal(sp, x, y).verdict == is_bj_orthogonal(sp, a * x, -b * y).verdict

    def test_convexity_along_line(self, rng):
        x, y = rng.standard_normal(4), rng.standard_normal(4)
        sp = PNormSpace(4, 1.5)
        R = 2 * p_norm(sp, x) / p_norm(sp, y)
        for l1, l2 in rng.uniform(-R, R, size=(100, 2)):
            mid = p_norm(sp, x + (l1 + l2) / 2 * y)
            assert mid <= (p_norm(sp, x + l1 * y) + p_norm(sp, x + l2 * y)) / 2 + 1e-12

    def test_constructive_witness(self, rng):
        # z attaining the norm of f is BJ orthogonal to ker f
        import scipy.linalg

        for p in (1.3, 2.0, 5.0):
            sp = PNormSpace(3, p)
            f = rng.standard_normal(3)
            z = inverse_duality(sp, f)
            for b in scipy.linalg.null_space(f[None, :]).T:
                assert is_bj_orthogonal(sp, z, b).verdict


class TestIsosceles:
    def test_l2_basis(self):
        assert is_isosceles_orthogonal(L2, [1, 0], [0, 1]).verdict

    def test_l1_same_vector(self):
        r = is_isosceles_orthogonal(PNormSpace(2, 1), [1, 0], [1, 0])
        assert not r.verdict and r.gap == 1

    def test_linf_basis(self):
        assert is_isosceles_orthogonal(PNormSpace(2, math.inf), [1, 0], [0, 1]).verdict


@pytest.mark.parametrize(
    "space, expected",
    [
        (PNormSpace(3, 2), (True, True)),
        (PNormSpace(2, 1), (False, False)),
        (PNormSpace(2, math.inf), (False, False)),
        (PNormSpace(2, 1.5), (True, True)),
        (PNormSpace(1, 1), (True, True)),
    ],
)
def test_space_properties(space, expected):
    assert space_properties(space) == expected
