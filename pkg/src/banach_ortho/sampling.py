"""Random instance generators for the property suites and tests."""

from __future__ import annotations

from typing import Optional

import numpy as np
import scipy.stats

from .pairing import PairingOperator
from .space import ScalarField

__all__ = [
    "random_vector",
    "random_matrix",
    "random_pairing",
    "random_symmetric_pairing",
    "random_t_isometry",
    "isotropic_vector",
]


def random_vector(rng: np.random.Generator, n: int, field=ScalarField.REAL) -> np.ndarray:
    if ScalarField(field) is ScalarField.COMPLEX:
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return rng.standard_normal(n)


def random_matrix(rng: np.random.Generator, n: int, field=ScalarField.REAL) -> np.ndarray:
    if ScalarField(field) is ScalarField.COMPLEX:
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return rng.standard_normal((n, n))


def random_pairing(rng: np.random.Generator, n: int, field=ScalarField.REAL) -> PairingOperator:
    return PairingOperator(random_matrix(rng, n, field), field)


def random_symmetric_pairing(
    rng: np.random.Generator, n: int, field=ScalarField.REAL
) -> tuple[PairingOperator, np.ndarray]:
    """Return ``(T, R)`` with ``M = R^T R`` for a random invertible ``R``."""
    R = random_matrix(rng, n, field) + n * np.eye(n)
    return PairingOperator(R.T @ R, field), R


def random_t_isometry(
    rng: np.random.Generator, T: PairingOperator, R: np.ndarray
) -> np.ndarray:
    """``A = R^{-1} Q R`` with ``Q`` random orthogonal, so that ``A^T M A = M``
    whenever ``M = R^T R``."""
    Q = scipy.stats.ortho_group.rvs(T.n, random_state=rng) if T.n > 1 else np.eye(1)
    return np.linalg.solve(R, Q @ R)


def isotropic_vector(
    rng: np.random.Generator, T: PairingOperator, attempts: int = 20
) -> Optional[np.ndarray]:
    """A unit-norm ``x != 0`` with ``(Tx, x) = 0`` taken from the zero set of
    the quadratic form, or ``None`` if none was found (real definite forms
    have none)."""
    S = (T.M + T.M.T) / 2
    n = T.n
    if n < 2:
        return None
    if T.field is ScalarField.COMPLEX:
        for _ in range(attempts):
            a = random_vector(rng, n, T.field)
            b = random_vector(rng, n, T.field)
            # Q(a + t b) = Q(a) + 2t B(a, b) + t^2 Q(b)
            qa, qab, qb = a @ S @ a, a @ S @ b, b @ S @ b
            if abs(qb) < 1e-12:
                continue
            t = np.roots([qb, 2 * qab, qa])[rng.integers(2)]
            x = a + t * b
            return x / np.linalg.norm(x)
        return None
    w, V = np.linalg.eigh(S)
    null = np.flatnonzero(np.abs(w) <= 1e-12 * max(abs(w).max(), 1e-300))
    if len(null):
        return V[:, rng.choice(null)]
    pos, neg = np.flatnonzero(w > 1e-12 * abs(w).max()), np.flatnonzero(w < -1e-12 * abs(w).max())
    if len(pos) == 0 or len(neg) == 0:
        return None
    i, j = rng.choice(pos), rng.choice(neg)
    # a^2 w_i + b^2 w_j = 0
    a, b = np.sqrt(-w[j]), np.sqrt(w[i]) * rng.choice([-1.0, 1.0])
    x = a * V[:, i] + b * V[:, j]
    return x / np.linalg.norm(x)
