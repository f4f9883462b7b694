"""Left and right symmetry of T-orthogonality at a point.

Left symmetry at ``x`` asks that ``(Tx, y) = 0`` force ``(Ty, x) = 0`` for
every ``y``.  Both sides are linear functionals of ``y``, namely ``u = Mx``
and ``v = M^T x``, so the condition is the kernel inclusion
``ker u <= ker v``, which holds exactly when ``v`` is a multiple of ``u``.
Every decision here is made this way, algebraically; random sampling is
left to the verification suites.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .pairing import (
    TWO_PI,
    PairingOperator,
    SignClass,
    ThetaDirection,
    pair,
    pair_theta,
    sign_class,
    t_perp_basis,
)
from .space import DEFAULT_TOL, ScalarField

__all__ = [
    "SymmetryVerdict",
    "HalfspaceReport",
    "reversed_functional",
    "symmetry_verdict",
    "is_left_symmetric_at",
    "is_right_symmetric_at",
    "symmetry_scalar",
    "is_theta_left_symmetric_at",
    "is_operator_symmetric",
    "find_nonisotropic",
    "halfspace_symmetry_check",
]


@dataclass(frozen=True)
class SymmetryVerdict:
    """Left/right symmetry at a point.

    ``scalar`` is the ``lam`` with ``(Tx, y) = lam (Ty, x)`` for all ``y``
    when both functionals are nonzero and collinear, else ``None``.
    """

    left: bool
    right: bool
    scalar: Optional[complex]
    certificate: str


class HalfspaceReport(NamedTuple):
    holds: bool
    phi0: Optional[float]
    counterexample: Optional[dict]


def reversed_functional(T: PairingOperator, x) -> np.ndarray:
    """Dual vector of ``y -> (Ty, x)``, i.e. ``M^T x``."""
    return T.M.T @ T._vec(x)


def _span_fit(v: np.ndarray, u: np.ndarray) -> tuple[complex, float]:
    """Least-squares ``c`` with ``v ~ c u`` and the residual norm."""
    c = np.vdot(u, v) / np.vdot(u, u)
    return c, float(np.linalg.norm(v - c * u))


def _functionals(T: PairingOperator, x, tol: float):
    x = T._vec(x)
    u = T.M @ x
    v = T.M.T @ x
    floor = tol * T.norm * float(np.linalg.norm(x))
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    return u, v, nu <= floor, nv <= floor


def symmetry_verdict(T: PairingOperator, x, tol: float = DEFAULT_TOL) -> SymmetryVerdict:
    """Decide left and right symmetry of T-orthogonality at ``x`` together."""
    u, v, u_zero, v_zero = _functionals(T, x, tol)
    if u_zero and v_zero:
        return SymmetryVerdict(True, True, None, "Tx = 0 and (T.)x = 0: both kernels are the whole space")
    if u_zero:
        return SymmetryVerdict(
            False, True, None, "Tx = 0 but (T.)x != 0: x is T-orthogonal to everything"
        )
    if v_zero:
        return SymmetryVerdict(
            True, False, None,
            "(T.)x = 0 but Tx != 0: every y is T-orthogonal to x; no finite lambda",
        )
    c, res = _span_fit(v, u)
    # ties at the threshold count as not symmetric
    if res < tol * float(np.linalg.norm(v)):
        lam = 1.0 / c
        return SymmetryVerdict(
            True, True, complex(lam),
            f"M^T x = c Mx with c = {complex(c):.6g}, relative residual {res / np.linalg.norm(v):.2e}",
        )
    return SymmetryVerdict(
        False, False, None,
        f"M^T x not in span(Mx): relative residual {res / np.linalg.norm(v):.2e}",
    )


def is_left_symmetric_at(T: PairingOperator, x, tol: float = DEFAULT_TOL) -> SymmetryVerdict:
    """Decide whether ``x _|_T y`` implies ``y _|_T x`` for all ``y``.

    Read the ``left`` field of the returned verdict.
    """
    return symmetry_verdict(T, x, tol)


def is_right_symmetric_at(T: PairingOperator, x, tol: float = DEFAULT_TOL) -> SymmetryVerdict:
    """Decide whether ``y _|_T x`` implies ``x _|_T y`` for all ``y``.

    Read the ``right`` field of the returned verdict.
    """
    return symmetry_verdict(T, x, tol)


def symmetry_scalar(T: PairingOperator, x, tol: float = DEFAULT_TOL) -> complex:
    """Scalar ``lam`` with ``(Tx, y) = lam (Ty, x)`` for every ``y``.

    Raises:
        ValueError: if ``Tx = 0``, if T-orthogonality is not left symmetric at
            ``x``, or if ``y -> (Ty, x)`` vanishes while ``Tx`` does not (no
            finite ``lam`` exists then).
    """
    verdict = symmetry_verdict(T, x, tol)
    if not verdict.left:
        raise ValueError("T-orthogonality is not left symmetric at x")
    if verdict.scalar is None:
        raise ValueError(f"lambda undetermined: {verdict.certificate}")
    lam = verdict.scalar
    x = T._vec(x)
    err = 0.0
    for k in range(T.n):
        e = np.zeros(T.n)
        e[k] = 1.0
        a, b = pair(T, x, e), pair(T, e, x)
        err = max(err, abs(a - lam * b) / max(abs(a), abs(lam * b), 1e-300))
    if err > max(1e-10, 10 * tol):
        raise ArithmeticError(f"lambda fails on the basis, relative error {err:.2e}")
    if T.field is ScalarField.REAL:
        return lam.real
    return lam


def _theta_coefficients(T: PairingOperator, theta: float, w: np.ndarray) -> np.ndarray:
    if T.field is ScalarField.REAL:
        return math.cos(theta) * w.real
    w = cmath.exp(-1j * theta) * w
    # Re(w . (a + ib)) = Re(w) . a - Im(w) . b
    return np.concatenate([w.real, -w.imag])


def is_theta_left_symmetric_at(
    T: PairingOperator, theta, x, tol: float = DEFAULT_TOL
) -> bool:
    """Decide whether ``x _|_{T_theta} y`` implies ``y _|_{T_theta} x``.

    Both sides are real-linear functionals of ``y`` on R^{2n}; the test is
    real collinearity of their coefficient vectors.

    Raises:
        ValueError: for a real operator with ``theta`` not in ``{0, pi}``.
    """
    theta = float(ThetaDirection(float(theta)))
    if T.field is ScalarField.REAL and min(
        abs(theta), abs(theta - math.pi), abs(theta - TWO_PI)
    ) > 1e-12:
        raise ValueError("real T_theta-orthogonality is only defined for theta in {0, pi}")
    x = T._vec(x)
    a = _theta_coefficients(T, theta, T.M @ x)
    b = _theta_coefficients(T, theta, T.M.T @ x)
    floor = tol * T.norm * float(np.linalg.norm(x))
    na, nb = float(np.linalg.norm(a)), float(np.linalg.norm(b))
    if na <= floor:
        return nb <= floor
    if nb <= floor:
        return True
    _, res = _span_fit(b, a)
    return res < tol * nb


def is_operator_symmetric(T: PairingOperator, tol: float = DEFAULT_TOL) -> bool:
    """``(Tx, y) = (Ty, x)`` for all ``x, y``, i.e. ``M = M^T`` (no conjugate)."""
    return bool(np.linalg.norm(T.M - T.M.T) <= tol * np.linalg.norm(T.M))


def find_nonisotropic(T: PairingOperator, tol: float = DEFAULT_TOL) -> Optional[np.ndarray]:
    """Return some ``x`` with ``(Tx, x) != 0``, or ``None`` if every vector is
    isotropic (which happens exactly when ``M + M^T = 0``)."""
    S = T.M + T.M.T
    mnorm = float(np.linalg.norm(T.M))
    if np.linalg.norm(S) <= tol * mnorm:
        return None
    dtype = T.field.dtype
    diag = np.abs(np.diag(S))
    i = int(np.argmax(diag))
    x = np.zeros(T.n, dtype=dtype)
    if diag[i] > tol * mnorm:
        x[i] = 1.0
    else:
        off = np.abs(S) - np.diag(diag)
        i, j = np.unravel_index(int(np.argmax(off)), off.shape)
        x[i] = x[j] = 1.0
    assert abs(pair(T, x, x)) > 0.0
    return x


def halfspace_symmetry_check(
    T: PairingOperator,
    x,
    samples: int = 500,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
) -> HalfspaceReport:
    """Sample the sign-class form of left symmetry at ``x``.

    With ``lam = |lam| e^{i phi0}`` from :func:`symmetry_scalar`, checks over
    random ``(theta, y)`` that ``y`` in ``x^+_theta`` gives ``x`` in
    ``y^+_{theta - phi0}`` and likewise for ``-``; a zero pairing puts ``y``
    in both classes.  Half of the ``y`` are drawn from the T-orthogonal
    complement of ``x``, which exposes failures for every choice of ``phi0``
    when ``x`` is not left symmetric.
    """
    x = T._vec(x)
    verdict = symmetry_verdict(T, x, tol)
    u, v, u_zero, _ = _functionals(T, x, tol)
    if verdict.scalar is not None:
        phi0 = cmath.phase(verdict.scalar) % TWO_PI
    elif verdict.left:
        # Tx = 0 (every phi0 works) or (T.)x = 0 (reversed class always zero)
        phi0 = 0.0 if u_zero else None
    else:
        c, _ = _span_fit(v, u) if not u_zero else (0.0, 0.0)
        phi0 = (-cmath.phase(c)) % TWO_PI if c != 0 else 0.0

    rng = np.random.default_rng(seed)
    is_complex = T.field is ScalarField.COMPLEX
    kernel = None if u_zero else t_perp_basis(T, x)
    shift = phi0 if phi0 is not None else 0.0
    allowed = {
        SignClass.PLUS: {SignClass.PLUS, SignClass.ZERO},
        SignClass.MINUS: {SignClass.MINUS, SignClass.ZERO},
        SignClass.ZERO: {SignClass.ZERO},
    }
    for k in range(samples):
        theta = rng.uniform(0.0, TWO_PI) if is_complex else math.pi * rng.integers(2)
        if kernel is not None and k % 2 == 1:
            coeffs = _random_scalars(rng, kernel.shape[0], is_complex)
            y = coeffs @ kernel
        else:
            y = _random_scalars(rng, T.n, is_complex)
        fwd = sign_class(T, theta, x, y, tol)
        rev = sign_class(T, theta - shift, y, x, tol)
        if rev not in allowed[fwd]:
            return HalfspaceReport(
                False,
                phi0,
                {
                    "theta": float(theta),
                    "y": y,
                    "forward": fwd.value,
                    "reversed": rev.value,
                    "forward_value": pair_theta(T, theta, x, y),
                    "reversed_value": pair_theta(T, theta - shift, y, x),
                },
            )
    return HalfspaceReport(True, phi0, None)


def _random_scalars(rng: np.random.Generator, size: int, is_complex: bool) -> np.ndarray:
    if is_complex:
        return rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return rng.standard_normal(size)
