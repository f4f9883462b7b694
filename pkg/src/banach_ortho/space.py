"""Finite-dimensional l_p spaces over the reals or the complex numbers.

Vectors and dual vectors are plain 1-D numpy arrays.  A dual vector ``f``
acts on a vector ``x`` bilinearly, ``f(x) = sum(f * x)``, with no complex
conjugation; conjugation only appears inside the duality-map formulas where
maximizing a modulus requires it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any, Callable, NamedTuple, Optional

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "ScalarField",
    "PNormSpace",
    "OrthResult",
    "BJMinimum",
    "as_vector",
    "p_norm",
    "dual_norm",
    "apply_functional",
    "support_functional",
    "inverse_duality",
    "norm_attainment_direction",
    "golden_section",
    "bj_minimize",
    "is_bj_orthogonal",
    "is_isosceles_orthogonal",
    "space_properties",
]

DEFAULT_TOL = 1e-8

_INVGOLD = (math.sqrt(5.0) - 1.0) / 2.0


class ScalarField(str, enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self) -> type:
        return np.float64 if self is ScalarField.REAL else np.complex128


@dataclass(frozen=True)
class PNormSpace:
    """The space l_p^n over ``field``.

    ``p`` may be any real number >= 1 or ``math.inf``.
    """

    n: int
    p: float
    field: ScalarField = ScalarField.REAL

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        p = float(self.p)
        if math.isnan(p) or p < 1:
            raise ValueError(f"exponent must satisfy p >= 1, got {self.p!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "field", ScalarField(self.field))

    @property
    def q(self) -> float:
        """Dual exponent, 1/p + 1/q = 1."""
        if self.p == 1:
            return math.inf
        if math.isinf(self.p):
            return 1.0
        return self.p / (self.p - 1.0)

    dual_exponent = q

    @property
    def is_complex(self) -> bool:
        return self.field is ScalarField.COMPLEX

    @property
    def has_unique_duality(self) -> bool:
        return 1 < self.p < math.inf

    def dual(self) -> "PNormSpace":
        return PNormSpace(self.n, self.q, self.field)


@dataclass(frozen=True)
class OrthResult:
    """Outcome of an orthogonality decision.

    ``gap`` measures the distance from exact orthogonality in the scale of
    the operation that produced it, so callers may re-threshold it.
    """

    verdict: bool
    gap: float
    witness: Any = None

    def __bool__(self) -> bool:
        return self.verdict


class BJMinimum(NamedTuple):
    lam: complex | float
    m: float


def as_vector(space: PNormSpace, x, name: str = "x") -> np.ndarray:
    """Coerce ``x`` to a vector of ``space``, checking shape and finiteness."""
    arr = np.asarray(x)
    if arr.ndim != 1 or arr.shape[0] != space.n:
        raise ValueError(
            f"{name} has shape {arr.shape}, expected ({space.n},) for this space"
        )
    if np.iscomplexobj(arr) and not space.is_complex:
        if np.any(arr.imag != 0):
            raise ValueError(f"{name} has complex entries but the space is real")
        arr = arr.real
    arr = arr.astype(space.field.dtype)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} has non-finite entries")
    return arr


def _lp(a: np.ndarray, p: float) -> float:
    a = np.abs(a)
    top = float(a.max()) if a.size else 0.0
    if top == 0.0 or math.isinf(p):
        return top
    if p == 1:
        return float(a.sum())
    # scale by the largest modulus to keep a**p in range
    return top * float(np.sum((a / top) ** p)) ** (1.0 / p)


def p_norm(space: PNormSpace, x) -> float:
    """Return the l_p norm of ``x``."""
    return _lp(as_vector(space, x), space.p)


def dual_norm(space: PNormSpace, f) -> float:
    """Return the l_q norm of the dual vector ``f``."""
    return _lp(as_vector(space, f, "f"), space.q)


def apply_functional(f, x):
    """Evaluate ``f(x) = sum_i f_i x_i`` (bilinear)."""
    return np.sum(np.asarray(f) * np.asarray(x))


def _phase(a: np.ndarray) -> np.ndarray:
    mod = np.abs(a)
    out = np.zeros_like(a)
    nz = mod > 0
    out[nz] = a[nz] / mod[nz]
    return out


def _require_smooth(space: PNormSpace, what: str):
    if not space.has_unique_duality:
        raise ValueError(
            f"{what} is not unique for p = {space.p:g}; use bj_minimize instead"
        )


def support_functional(space: PNormSpace, x) -> np.ndarray:
    """Normalized support functional at ``x``.

    Returns ``f`` with ``f(x) = ||x||`` and ``||f||_q = 1``.  Multiply by
    ``||x||`` to get the duality-map element ``J(x)``.

    Raises:
        ValueError: if ``p`` is 1 or infinite, or ``x`` is zero.
    """
    _require_smooth(space, "the support functional")
    x = as_vector(space, x)
    nx = _lp(x, space.p)
    if nx == 0.0:
        raise ValueError("support functional of the zero vector is undefined")
    a = np.abs(x) / nx
    return np.conj(_phase(x)) * a ** (space.p - 1.0)


def inverse_duality(space: PNormSpace, f) -> np.ndarray:
    """Unit vector ``z`` at which ``f`` attains its norm, with ``f(z) > 0``.

    This inverts :func:`support_functional`: ``f`` is a positive multiple of
    the support functional at ``z``.
    """
    _require_smooth(space, "the norm-attaining vector")
    f = as_vector(space, f, "f")
    nf = _lp(f, space.q)
    if nf == 0.0:
        raise ValueError("the zero functional attains its norm everywhere")
    z = np.conj(_phase(f)) * (np.abs(f) / nf) ** (space.q - 1.0)
    return z / _lp(z, space.p)


def norm_attainment_direction(space: PNormSpace, f) -> np.ndarray:
    """Canonical representative of the set of unit vectors where ``|f|`` is
    maximal.  For 1 < p < inf that set is ``{c z : |c| = 1}`` and ``z`` is
    the vector returned by :func:`inverse_duality`."""
    return inverse_duality(space, f)


def golden_section(
    func: Callable[[float], float], lo: float, hi: float, xtol: float, maxiter: int = 500
) -> tuple[float, float]:
    """Minimize a unimodal ``func`` on ``[lo, hi]``.

    Returns the best evaluated ``(argmin, min)``, endpoints included.
    """
    a, b = lo, hi
    c = b - _INVGOLD * (b - a)
    d = a + _INVGOLD * (b - a)
    fc, fd = func(c), func(d)
    best = min((func(lo), lo), (func(hi), hi), (fc, c), (fd, d))
    it = 0
    while b - a > xtol and it < maxiter:
        it += 1
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVGOLD * (b - a)
            fc = func(c)
            if fc < best[0]:
                best = (fc, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVGOLD * (b - a)
            fd = func(d)
            if fd < best[0]:
                best = (fd, d)
    return best[1], best[0]


def bj_minimize(space: PNormSpace, x, y, max_sweeps: int = 200) -> BJMinimum:
    """Minimize ``||x + lam*y||`` over scalars ``lam``.

    The search is confined to ``|lam| <= 2||x||/||y||``, outside of which the
    objective exceeds ``||x||``.  Real spaces use a single golden-section
    search.  Complex spaces alternate golden-section searches along the real
    axis, the imaginary axis and the two diagonals until a sweep stops
    moving ``lam``.

    Returns:
        ``BJMinimum(lam, m)``; ``m <= ||x||`` always since ``lam = 0`` is
        evaluated.
    """
    x = as_vector(space, x)
    y = as_vector(space, y, "y")
    p = space.p
    nx, ny = _lp(x, p), _lp(y, p)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    if nx == 0.0:
        return BJMinimum(0.0 if not space.is_complex else 0j, 0.0)
    radius = 2.0 * nx / ny
    xtol = 1e-12 * (1.0 + nx)

    if not space.is_complex:
        lam, m = golden_section(lambda t: _lp(x + t * y, p), -radius, radius, xtol)
        if m >= nx:
            return BJMinimum(0.0, nx)
        return BJMinimum(float(lam), m)

    directions = (1.0, 1j, (1 + 1j) / math.sqrt(2.0), (1 - 1j) / math.sqrt(2.0))
    lam, m = 0j, nx
    for _ in range(max_sweeps):
        start = lam
        for d in directions:
            yd = d * y
            base = x + lam * y
            # the disk |lam| <= radius fits in any line segment of length 4*radius
            t, val = golden_section(
                lambda s: _lp(base + s * yd, p), -2 * radius, 2 * radius, xtol
            )
            if val < m:
                lam, m = lam + t * d, val
        if abs(lam - start) <= xtol:
            break
    return BJMinimum(complex(lam), m)


def is_bj_orthogonal(space: PNormSpace, x, y, tol: float = DEFAULT_TOL) -> OrthResult:
    """Decide Birkhoff-James orthogonality ``x _|_B y`` by direct minimization.

    ``gap = (||x|| - min_lam ||x + lam*y||) / ||x||`` and the verdict is
    ``gap <= tol``.  The witness is the minimizing scalar.
    """
    x = as_vector(space, x)
    y = as_vector(space, y, "y")
    nx = _lp(x, space.p)
    if nx == 0.0:
        raise ValueError("x must be nonzero")
    lam, m = bj_minimize(space, x, y)
    gap = max(0.0, (nx - m) / nx)
    return OrthResult(gap <= tol, gap, lam)


def is_bj_orthogonal_smooth(
    space: PNormSpace, x, y, tol: float = DEFAULT_TOL
) -> OrthResult:
    """Smooth-space criterion: ``x _|_B y`` iff the support functional at
    ``x`` annihilates ``y``.  Gap is ``|J(x)(y)| / ||y||``."""
    x = as_vector(space, x)
    y = as_vector(space, y, "y")
    ny = _lp(y, space.p)
    if ny == 0.0:
        raise ValueError("y must be nonzero")
    value = apply_functional(support_functional(space, x), y)
    gap = float(abs(value)) / ny
    return OrthResult(gap <= tol, gap, value)


def is_isosceles_orthogonal(
    space: PNormSpace, x, y, tol: float = DEFAULT_TOL
) -> OrthResult:
    """Decide ``||x + y|| == ||x - y||`` up to a relative tolerance."""
    x = as_vector(space, x)
    y = as_vector(space, y, "y")
    plus, minus = _lp(x + y, space.p), _lp(x - y, space.p)
    gap = abs(plus - minus) / max(plus, minus, 1.0)
    return OrthResult(gap <= tol, gap, (plus, minus))


def space_properties(space: PNormSpace) -> tuple[bool, bool]:
    """Return ``(smooth, strictly_convex)``; for l_p both hold iff 1 < p < inf
    or the space is one-dimensional."""
    ok = space.n == 1 or space.has_unique_duality
    return ok, ok
