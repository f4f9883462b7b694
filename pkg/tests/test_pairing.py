import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from banach_ortho.pairing import (
    PairingOperator,
    SignClass,
    ThetaDirection,
    is_isotropic,
    is_T_orthogonal,
    is_T_theta_orthogonal,
    operator_norm,
    pair,
    pair_theta,
    sign_class,
    t_perp_basis,
    theta_direction,
)
from banach_ortho.sampling import random_pairing, random_vector

X0, Y0 = np.array([0, 1]), np.array([0.5, -1 / 3])


def test_column_convention(first_c2):
    # column j is T(e_j): T(1,0) = 7i (1,0)* + (0,1)*
    np.testing.assert_array_equal(first_c2(np.array([1, 0])), [7j, 1])
    assert pair(first_c2, [1, 0], [0, 1]) == 1


def test_pair_first_c2(first_c2):
    assert abs(pair(first_c2, X0, Y0) - (1 - 1j)) <= 1e-12
    assert not is_T_orthogonal(first_c2, X0, Y0).verdict


def test_pair_zero_x(first_c2):
    assert pair(first_c2, [0, 0], [3, 1j]) == 0


def test_pair_non_bijective(non_bijective):
    assert pair(non_bijective, [1, 0], [1, 1]) == 0
    assert is_T_orthogonal(non_bijective, [1, 0], [1, 1]).verdict
    r = is_T_orthogonal(non_bijective, [1, 1], [1, 0])
    assert not r.verdict and pair(non_bijective, [1, 1], [1, 0]) == 3


def test_pair_theta_examples(first_c2, direction_op):
    assert abs(pair_theta(first_c2, math.pi / 4, X0, Y0)) <= 1e-12
    assert is_T_theta_orthogonal(first_c2, math.pi / 4, X0, Y0).verdict
    assert abs(pair_theta(direction_op, math.pi / 2, [1, 0], [1, 1j])) <= 1e-12
    assert pair_theta(direction_op, math.pi / 2, [1, 1j], [1, 0]) == pytest.approx(1)
    assert not is_T_theta_orthogonal(direction_op, math.pi / 2, [1, 1j], [1, 0]).verdict


def test_theta_direction_examples(first_c2):
    d = theta_direction(first_c2, X0, Y0)
    assert float(d) == pytest.approx(math.pi / 4) and not d.degenerate
    T = PairingOperator(np.eye(2), "complex")
    assert float(theta_direction(T, [1, 0], [2, 0])) == pytest.approx(math.pi / 2)
    d = theta_direction(T, [1, 0], [0, 1])
    assert d.degenerate and float(d) == 0


def test_theta_reduced():
    assert ThetaDirection(-math.pi / 2).theta == pytest.approx(3 * math.pi / 2)


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_theta_direction_annihilates(seed, n):
    r = np.random.default_rng(seed)
    T = random_pairing(r, n, "complex")
    x, y = random_vector(r, n, "complex"), random_vector(r, n, "complex")
    th = float(theta_direction(T, x, y))
    assert 0 <= th < 2 * math.pi
    assert abs(pair_theta(T, th, x, y)) <= 1e-12 * (1 + abs(pair(T, x, y)))
    assert abs(pair_theta(T, th + math.pi, x, y)) <= 1e-12 * (1 + abs(pair(T, x, y)))


def test_sign_classes(first_c2, direction_op):
    assert sign_class(first_c2, math.pi / 4, X0, Y0) is SignClass.ZERO
    assert sign_class(direction_op, math.pi / 2, [1, 1j], [1, 0]) is SignClass.PLUS
    assert sign_class(direction_op, -math.pi / 2, [1, 1j], [1, 0]) is SignClass.MINUS


def test_isotropic(direction_op, lemma_op):
    assert is_isotropic(direction_op, [1, 0]).verdict
    assert is_isotropic(lemma_op, [1, 0]).verdict
    r = is_isotropic(PairingOperator(np.eye(2)), [1, 2])
    assert not r.verdict


def test_t_perp_identity():
    B = t_perp_basis(PairingOperator(np.eye(2)), [1, 0])
    assert B.shape == (1, 2)
    np.testing.assert_allclose(np.abs(B[0]), [0, 1], atol=1e-15)


def test_t_perp_non_bijective(non_bijective):
    B = t_perp_basis(non_bijective, [1, 0])
    assert B.shape == (1, 2)
    assert abs(B[0, 0] - B[0, 1]) < 1e-12  # span{(1,1)}


def test_t_perp_full_space_error(non_bijective):
    with pytest.raises(ValueError):
        t_perp_basis(non_bijective, [2, -1])


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(2, 5), st.booleans())
def test_t_perp_orthogonal(seed, n, cplx):
    r = np.random.default_rng(seed)
    f = "complex" if cplx else "real"
    T, x = random_pairing(r, n, f), random_vector(r, n, f)
    B = t_perp_basis(T, x)
    assert B.shape == (n - 1, n)
    for b in B:
        assert is_T_orthogonal(T, x, b).verdict


@settings(max_examples=100)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_bilinearity(seed, n):
    r = np.random.default_rng(seed)
    T = random_pairing(r, n, "complex")
    x, x2, y = (random_vector(r, n, "complex") for _ in range(3))
    a, b = complex(*r.standard_normal(2)), complex(*r.standard_normal(2))
    lhs = pair(T, a * x + b * x2, y)
    assert lhs == pytest.approx(a * pair(T, x, y) + b * pair(T, x2, y), abs=1e-10)
    assert pair(T, y, a * x) == pytest.approx(a * pair(T, y, x), abs=1e-10)


def test_operator_norm_matches_svd(rng):
    M = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    assert operator_norm(M) == pytest.approx(np.linalg.norm(M, 2), rel=1e-6)


def test_bijective_flag(first_c2, non_bijective):
    assert first_c2.bijective
    assert not non_bijective.bijective


def test_operator_validation():
    with pytest.raises(ValueError):
        PairingOperator(np.ones((2, 3)))
    with pytest.raises(ValueError):
        PairingOperator(np.array([[1j, 0], [0, 1]]), "real")
    with pytest.raises(ValueError):
        pair(PairingOperator(np.eye(2)), [1, 2, 3], [1, 0])
