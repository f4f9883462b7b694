"""Pairing operators T : X -> X* and the orthogonality relations they induce.

A pairing operator is stored as an n x n matrix ``M`` whose column ``j``
holds the dual-basis coefficients of ``T(e_j)``.  Hence

    (Tx, y) = sum_j (M x)_j y_j = y^T M x,
    (Ty, x) = sum_j (M^T x)_j y_j,

so the transpose of ``M`` carries the reversed pairing.  No conjugation is
involved anywhere: the dual action is bilinear over both fields.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.linalg

from .space import DEFAULT_TOL, OrthResult, ScalarField

__all__ = [
    "PairingOperator",
    "ThetaDirection",
    "SignClass",
    "pair",
    "pair_theta",
    "is_T_orthogonal",
    "is_T_theta_orthogonal",
    "theta_direction",
    "sign_class",
    "is_isotropic",
    "t_perp_basis",
    "operator_norm",
]

TWO_PI = 2.0 * math.pi


def operator_norm(M: np.ndarray, iterations: int = 20) -> float:
    """Estimate the spectral norm of ``M`` by power iteration on ``M^H M``."""
    M = np.asarray(M)
    if not np.any(M):
        return 0.0
    # fixed start keeps the estimate deterministic
    v = np.random.default_rng(0x5EED).standard_normal(M.shape[1]).astype(M.dtype)
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(iterations):
        w = M @ v
        sigma = float(np.linalg.norm(w))
        if sigma == 0.0:
            break
        v = M.conj().T @ w
        v /= np.linalg.norm(v)
    return max(sigma, float(np.linalg.norm(M @ v)))


@dataclass(frozen=True, eq=False)
class PairingOperator:
    """Matrix representation of a bounded linear ``T : X -> X*``."""

    M: np.ndarray
    field: ScalarField = ScalarField.REAL

    def __post_init__(self):
        fld = ScalarField(self.field)
        M = np.asarray(self.M)
        if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
            raise ValueError(f"pairing matrix must be square, got shape {M.shape}")
        if np.iscomplexobj(M) and fld is ScalarField.REAL:
            if np.any(M.imag != 0):
                raise ValueError("complex entries in a real pairing operator")
            M = M.real
        M = np.array(M, dtype=fld.dtype)
        if not np.all(np.isfinite(M)):
            raise ValueError("pairing matrix has non-finite entries")
        M.setflags(write=False)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "field", fld)

    @classmethod
    def from_columns(cls, columns, field=ScalarField.REAL) -> "PairingOperator":
        """Build from the images ``T(e_1), ..., T(e_n)`` in dual coordinates."""
        return cls(np.array(columns).T, field)

    @property
    def n(self) -> int:
        return self.M.shape[0]

    @property
    def columns(self) -> np.ndarray:
        return self.M.T

    @cached_property
    def norm(self) -> float:
        return operator_norm(self.M)

    @cached_property
    def bijective(self) -> bool:
        s = np.linalg.svd(self.M, compute_uv=False)
        return bool(s[-1] > 1e-10 * max(s[0], np.finfo(float).tiny))

    def transpose(self) -> "PairingOperator":
        return PairingOperator(self.M.T, self.field)

    def __call__(self, x) -> np.ndarray:
        """``Tx`` as a dual vector."""
        return self.M @ self._vec(x)

    def _vec(self, x, name="x") -> np.ndarray:
        x = np.asarray(x)
        if x.shape != (self.n,):
            raise ValueError(f"{name} has shape {x.shape}, expected ({self.n},)")
        if self.field is ScalarField.REAL and np.iscomplexobj(x):
            if np.any(x.imag != 0):
                raise ValueError(f"{name} has complex entries but T is real")
            x = x.real
        return x


@dataclass(frozen=True)
class ThetaDirection:
    """An angle reduced to ``[0, 2*pi)``.

    ``degenerate`` marks the case where every direction works.
    """

    theta: float
    degenerate: bool = False

    def __post_init__(self):
        t = math.fmod(float(self.theta), TWO_PI)
        if t < 0:
            t += TWO_PI
        if t >= TWO_PI:
            t = 0.0
        object.__setattr__(self, "theta", t)

    def __float__(self) -> float:
        return self.theta


class SignClass(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    ZERO = "zero"


def pair(T: PairingOperator, x, y):
    """Return ``(Tx, y)``."""
    x = T._vec(x)
    y = T._vec(y, "y")
    val = y @ (T.M @ x)
    return complex(val) if T.field is ScalarField.COMPLEX else float(val)


def pair_theta(T: PairingOperator, theta, x, y) -> float:
    """Return ``cos(theta) Re(Tx, y) + sin(theta) Im(Tx, y)``."""
    t = float(theta)
    val = complex(pair(T, x, y))
    return math.cos(t) * val.real + math.sin(t) * val.imag


def _scale(T: PairingOperator, x, y) -> float:
    return 1.0 + T.norm * float(np.linalg.norm(x)) * float(np.linalg.norm(y))


def is_T_orthogonal(T: PairingOperator, x, y, tol: float = DEFAULT_TOL) -> OrthResult:
    """Decide ``x _|_T y``; ``gap = |(Tx, y)| / (1 + ||M|| ||x|| ||y||)``."""
    val = pair(T, x, y)
    gap = abs(val) / _scale(T, x, y)
    return OrthResult(gap <= tol, gap, val)


def is_T_theta_orthogonal(
    T: PairingOperator, theta, x, y, tol: float = DEFAULT_TOL
) -> OrthResult:
    val = pair_theta(T, theta, x, y)
    gap = abs(val) / _scale(T, x, y)
    return OrthResult(gap <= tol, gap, val)


def theta_direction(T: PairingOperator, x, y) -> ThetaDirection:
    """Direction ``theta`` with ``x _|_{T_theta} y``.

    Any angle works when ``(Tx, y) = 0``; then ``theta = 0`` is returned with
    ``degenerate=True``.
    """
    val = complex(pair(T, x, y))
    a, b = val.real, val.imag
    if a == 0.0 and b == 0.0:
        return ThetaDirection(0.0, degenerate=True)
    return ThetaDirection(math.atan2(a, -b))


def sign_class(T: PairingOperator, theta, x, y, tol: float = DEFAULT_TOL) -> SignClass:
    """Classify ``y`` relative to ``x`` by the sign of ``(T_theta x, y)``."""
    val = pair_theta(T, theta, x, y)
    if abs(val) <= tol * _scale(T, x, y):
        return SignClass.ZERO
    return SignClass.PLUS if val > 0 else SignClass.MINUS


def is_isotropic(T: PairingOperator, x, tol: float = DEFAULT_TOL) -> OrthResult:
    """Decide ``(Tx, x) = 0``."""
    return is_T_orthogonal(T, x, x, tol)


def t_perp_basis(T: PairingOperator, x) -> np.ndarray:
    """Basis of ``{y : (Tx, y) = 0}``, one vector per row (``n - 1`` rows).

    Raises:
        ValueError: if ``Tx = 0``, in which case every ``y`` qualifies.
    """
    x = T._vec(x)
    u = T.M @ x
    if np.linalg.norm(u) <= 1e-14 * (T.norm * np.linalg.norm(x)):
        raise ValueError("Tx = 0: the T-orthogonal complement is the full space")
    return scipy.linalg.null_space(u[None, :]).T
