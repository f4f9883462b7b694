"""T-isometries, T-orthogonality preservers and Hilbert-space experiments.

An operator ``A`` on X has adjoint ``A*`` acting on dual coefficient vectors
by the plain transpose (the dual action is bilinear), so the pulled-back
pairing ``A* T A`` has matrix ``A^T M A``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .pairing import PairingOperator, is_T_orthogonal, pair, t_perp_basis
from .space import (
    DEFAULT_TOL,
    PNormSpace,
    ScalarField,
    as_vector,
    is_bj_orthogonal,
    p_norm,
    support_functional,
)

__all__ = [
    "FitReport",
    "PreservationResult",
    "adjoint_conjugate",
    "is_T_isometry",
    "preserver_scalar",
    "preserves_T_orthogonality_sampled",
    "hilbert_fit",
    "rotation_bj_deviation",
    "two_dim_hilbert_conditions",
    "lp_pairing_structure_check",
]


def _endo(T: PairingOperator, A) -> np.ndarray:
    A = np.asarray(A)
    if A.shape != (T.n, T.n):
        raise ValueError(f"operator has shape {A.shape}, expected {(T.n, T.n)}")
    if not np.all(np.isfinite(A)):
        raise ValueError("operator has non-finite entries")
    return A


def adjoint_conjugate(T: PairingOperator, A) -> PairingOperator:
    """The pairing ``(x, y) -> (TAx, Ay)``, with matrix ``A^T M A``."""
    A = _endo(T, A)
    field = T.field
    if np.iscomplexobj(A) and np.any(A.imag != 0):
        field = ScalarField.COMPLEX
    return PairingOperator(A.T @ T.M @ A, field)


def is_T_isometry(T: PairingOperator, A, tol: float = DEFAULT_TOL) -> bool:
    """``A* T A = T`` up to relative Frobenius error ``tol``."""
    K = adjoint_conjugate(T, A).M
    return bool(np.linalg.norm(K - T.M) <= tol * np.linalg.norm(T.M))


def preserver_scalar(T: PairingOperator, A, tol: float = DEFAULT_TOL) -> Optional[complex]:
    """Return ``beta`` with ``M = beta A^T M A``, or ``None`` if the two
    matrices are not collinear (or ``A^T M A = 0``)."""
    K = adjoint_conjugate(T, A).M
    kk = np.vdot(K, K).real
    if kk <= (tol * np.linalg.norm(T.M)) ** 2:
        return None
    beta = np.vdot(K, T.M) / kk
    if np.linalg.norm(T.M - beta * K) > tol * np.linalg.norm(T.M):
        return None
    if T.field is ScalarField.REAL and not np.iscomplexobj(K):
        return float(beta.real)
    return complex(beta)


class PreservationResult(NamedTuple):
    holds: bool
    counterexample: Optional[tuple[np.ndarray, np.ndarray]]
    # False when M is singular, where the characterization is not known
    conclusive: bool = True


def _perp_sample(rng, T: PairingOperator, x, is_complex: bool) -> np.ndarray:
    try:
        basis = t_perp_basis(T, x)
    except ValueError:
        return _gaussian(rng, T.n, is_complex)
    return _gaussian(rng, basis.shape[0], is_complex) @ basis


def _gaussian(rng, size, is_complex):
    if is_complex:
        return rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return rng.standard_normal(size)


def preserves_T_orthogonality_sampled(
    T: PairingOperator,
    A,
    samples: int = 500,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
) -> PreservationResult:
    """Sample ``x _|_T y <=> Ax _|_T Ay``.

    For each random ``x`` one ``y`` is drawn with ``x _|_T y`` exactly and
    ``Ax _|_T Ay`` is tested; then one ``y`` is drawn with ``Ax _|_T Ay``
    exactly (from the pulled-back pairing) and ``x _|_T y`` is tested.
    The first violation is returned.
    """
    A = _endo(T, A)
    K = adjoint_conjugate(T, A)
    is_complex = K.field is ScalarField.COMPLEX
    if is_complex and T.field is ScalarField.REAL:
        T = PairingOperator(T.M, ScalarField.COMPLEX)
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        x = _gaussian(rng, T.n, is_complex)
        y = _perp_sample(rng, T, x, is_complex)
        if not is_T_orthogonal(T, A @ x, A @ y, tol).verdict:
            return PreservationResult(False, (x, y), T.bijective)
        y = _perp_sample(rng, K, x, is_complex)
        if not is_T_orthogonal(T, x, y, tol).verdict:
            return PreservationResult(False, (x, y), T.bijective)
    return PreservationResult(True, None, T.bijective)


@dataclass(frozen=True)
class FitReport:
    """Least-squares search for a pairing whose orthogonality contains
    Birkhoff-James orthogonality on a random sample.

    ``residual`` is the smallest singular value of the (row-normalized)
    constraint system; ``m_fit`` the matching unit-Frobenius pairing.
    ``reverse_gap`` is the largest BJ gap seen when sampling ``m_fit``-
    orthogonal pairs, a spot check of the reverse inclusion.
    """

    m_fit: PairingOperator
    residual: float
    samples: int
    p: float
    seed: int
    reverse_gap: float = math.nan


def hilbert_fit(
    space: PNormSpace, samples: int = 200, seed: int = 42, reverse_checks: int = 20
) -> FitReport:
    """Fit a pairing ``M`` with ``x _|_B y => x _|_M y`` on random pairs.

    Each pair ``(x, y)``, with ``y`` in the kernel of the support functional
    at ``x``, contributes the row ``kron(y, x)`` acting on ``vec(M)``.
    """
    if not space.has_unique_duality:
        raise ValueError("hilbert_fit needs 1 < p < inf")
    if space.n < 2:
        raise ValueError("hilbert_fit needs dimension >= 2")
    n = space.n
    rng = np.random.default_rng(seed)
    rows = np.empty((samples, n * n), dtype=space.field.dtype)
    for k in range(samples):
        x = _gaussian(rng, n, space.is_complex)
        f = support_functional(space, x)
        # kernel of y -> sum(f * y): project out conj(f) in the Hermitian sense
        fc = np.conj(f)
        r = _gaussian(rng, n, space.is_complex)
        y = r - (np.sum(f * r) / np.vdot(fc, fc)) * fc
        row = np.kron(y, x)
        rows[k] = row / np.linalg.norm(row)
    _, s, vh = np.linalg.svd(rows, full_matrices=True)
    residual = float(s[-1]) if samples >= n * n else 0.0
    m = vh[-1].conj().reshape(n, n)
    m_fit = PairingOperator(m / np.linalg.norm(m), space.field)

    reverse_gap = 0.0
    for _ in range(reverse_checks):
        x = _gaussian(rng, n, space.is_complex)
        y = _perp_sample(rng, m_fit, x, space.is_complex)
        if p_norm(space, y) == 0.0:
            continue
        reverse_gap = max(reverse_gap, is_bj_orthogonal(space, x, y).gap)
    return FitReport(m_fit, residual, samples, space.p, seed, reverse_gap)


def rotation_bj_deviation(
    p: float, samples: int = 200, seed: int = 42
) -> tuple[float, Optional[tuple[float, float]]]:
    """Largest BJ gap of ``(a, b) _|_B (b, -a)`` in real l_p^2 over random
    ``(a, b)``, with the pair that attains it."""
    space = PNormSpace(2, p)
    rng = np.random.default_rng(seed)
    worst, witness = 0.0, None
    for _ in range(samples):
        a, b = rng.standard_normal(2)
        gap = is_bj_orthogonal(space, [a, b], [b, -a]).gap
        if gap > worst or witness is None:
            worst, witness = gap, (float(a), float(b))
    return worst, witness


@dataclass
class TwoDimReport:
    u_perp_v: float
    v_perp_u: float
    diagonals: float
    norm_identity: float
    norm_identity_witness: Optional[tuple[float, float, float]]
    t_implies_b: float
    b_implies_t: float
    tol: float

    @property
    def violations(self) -> dict:
        return {
            "u_perp_v": self.u_perp_v,
            "v_perp_u": self.v_perp_u,
            "diagonals": self.diagonals,
            "norm_identity": self.norm_identity,
            "t_implies_b": self.t_implies_b,
            "b_implies_t": self.b_implies_t,
        }

    @property
    def passed(self) -> dict:
        return {k: bool(v <= self.tol) for k, v in self.violations.items()}

    @property
    def all_pass(self) -> bool:
        return all(self.passed.values())


def two_dim_hilbert_conditions(
    space: PNormSpace,
    T: PairingOperator,
    u,
    v,
    samples: int = 500,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
) -> TwoDimReport:
    """Measure the conditions characterizing 2-D real inner product spaces.

    Reports the BJ gaps of ``u _|_ v``, ``v _|_ u`` and ``u+v _|_ u-v``,
    the worst relative violation of

        ||(g + k d) u + (d - k g) v|| = ||(g - k d) u + (d + k g) v||

    over random ``(g, d, k)``, and the sampled agreement of T-orthogonality
    with BJ orthogonality in both directions (the ``b_implies_t`` direction
    needs 1 < p < inf and is reported as 0 otherwise).
    """
    if space.n != 2 or space.is_complex:
        raise ValueError("two_dim_hilbert_conditions needs a real 2-dimensional space")
    if T.n != 2 or T.field is not ScalarField.REAL:
        raise ValueError("T must be a real 2 x 2 pairing")
    u = as_vector(space, u, "u")
    v = as_vector(space, v, "v")
    for name, w in (("u", u), ("v", v)):
        if abs(p_norm(space, w) - 1.0) > 1e-9:
            raise ValueError(f"{name} must be a unit vector")

    uv = is_bj_orthogonal(space, u, v).gap
    vu = is_bj_orthogonal(space, v, u).gap
    diag = is_bj_orthogonal(space, u + v, u - v).gap

    rng = np.random.default_rng(seed)
    worst, witness = 0.0, None
    t_to_b = b_to_t = 0.0
    for _ in range(samples):
        g, d, k = rng.uniform(-2.0, 2.0, size=3)
        lhs = p_norm(space, (g + k * d) * u + (d - k * g) * v)
        rhs = p_norm(space, (g - k * d) * u + (d + k * g) * v)
        dev = abs(lhs - rhs) / max(lhs, rhs, 1.0)
        if dev > worst:
            worst, witness = dev, (float(g), float(d), float(k))

        x = rng.standard_normal(2)
        y = _perp_sample(rng, T, x, False)
        if p_norm(space, y) > 0:
            t_to_b = max(t_to_b, is_bj_orthogonal(space, x, y).gap)
        if space.has_unique_duality:
            f = support_functional(space, x)
            y = np.array([-f[1], f[0]])
            b_to_t = max(b_to_t, is_T_orthogonal(T, x, y).gap)
    return TwoDimReport(uv, vu, diag, worst, witness, t_to_b, b_to_t, tol)


@dataclass
class StructureReport:
    diagonal: bool
    equal_diagonal: bool
    off_diagonal: float
    diagonal_spread: float


def lp_pairing_structure_check(
    T: PairingOperator, space: Optional[PNormSpace] = None, tol: float = DEFAULT_TOL
) -> StructureReport:
    """Check the shape forced on a 2 x 2 pairing whose orthogonality equals
    BJ orthogonality in l_p^2: ``e1 _|_ e2`` both ways makes ``M`` diagonal,
    and ``e1 + e2 _|_ e1 - e2`` makes the diagonal constant."""
    if T.n != 2:
        raise ValueError("structure check needs a 2 x 2 pairing")
    if space is not None and space.n != 2:
        raise ValueError("structure check needs a 2-dimensional space")
    M = T.M
    scale = max(float(np.linalg.norm(M)), np.finfo(float).tiny)
    off = float(max(abs(M[0, 1]), abs(M[1, 0]))) / scale
    # (T(e1 + e2), e1 - e2) = M11 - M22 + M21 - M12
    spread = float(abs(pair(T, [1.0, 1.0], [1.0, -1.0]))) / scale
    diagonal = off <= tol
    return StructureReport(diagonal, diagonal and spread <= tol, off, spread)
