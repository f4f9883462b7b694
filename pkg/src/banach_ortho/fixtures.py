"""Worked examples on C^2 and real l_2^2, replayed against their stated claims."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .pairing import PairingOperator, is_isotropic, pair, pair_theta
from .symmetry import is_theta_left_symmetric_at, symmetry_verdict

__all__ = [
    "FixtureResult",
    "FIXTURES",
    "first_c2_operator",
    "direction_example_operator",
    "non_bijective_operator",
    "lemma_counterexample_operator",
    "run_fixture",
    "run_all_fixtures",
]

EXACT = 1e-12


def first_c2_operator() -> PairingOperator:
    """T(1,0) = 7i (1,0)* + (0,1)*,  T(0,1) = 2 (1,0)* + 3i (0,1)*."""
    return PairingOperator.from_columns([[7j, 1], [2, 3j]], "complex")


def direction_example_operator() -> PairingOperator:
    """T(1,0) = i (0,1)*,  T(0,1) = (1,0)* + 3i (0,1)*."""
    return PairingOperator.from_columns([[0, 1j], [1, 3j]], "complex")


def non_bijective_operator() -> PairingOperator:
    """Real l_2^2: T(1,0) = (1,-1)*,  T(0,1) = (2,-2)*."""
    return PairingOperator.from_columns([[1, -1], [2, -2]])


def lemma_counterexample_operator() -> PairingOperator:
    """Real l_2^2: T(1,0) = (0,1)*,  T(0,1) = (1/sqrt2, 1/sqrt2)*."""
    r = 1 / math.sqrt(2)
    return PairingOperator.from_columns([[0, 1], [r, r]])


@dataclass
class FixtureResult:
    name: str
    checks: list = field(default_factory=list)

    def check(self, claim: str, ok, value=None):
        self.checks.append({"claim": claim, "ok": bool(ok), "value": value})

    @property
    def reproduced(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def to_dict(self) -> dict:
        return {"name": self.name, "reproduced": self.reproduced, "checks": self.checks}


def _prop_basic_c2() -> FixtureResult:
    res = FixtureResult("prop-basic-c2")
    T = first_c2_operator()
    x, y = np.array([0, 1]), np.array([0.5, -1 / 3])
    val = pair(T, x, y)
    res.check("(T(0,1), (1/2,-1/3)) = 1 - i", abs(val - (1 - 1j)) <= EXACT, val)
    res.check("(0,1) is not T-orthogonal to (1/2,-1/3)", abs(val) > EXACT, abs(val))
    th = pair_theta(T, math.pi / 4, x, y)
    res.check("(0,1) is T_{pi/4}-orthogonal to (1/2,-1/3)", abs(th) <= EXACT, th)
    return res


def _direction_example() -> FixtureResult:
    res = FixtureResult("direction-example")
    T = direction_example_operator()
    e1, w = np.array([1, 0]), np.array([1, 1j])
    q = pair(T, e1, e1)
    res.check("(1,0) is isotropic", is_isotropic(T, e1, EXACT).verdict, q)
    v = symmetry_verdict(T, e1)
    res.check("T-orthogonality is left symmetric at (1,0)", v.left, v.certificate)
    res.check("T-orthogonality is right symmetric at (1,0)", v.right, v.certificate)
    fwd = pair_theta(T, math.pi / 2, e1, w)
    rev = pair_theta(T, math.pi / 2, w, e1)
    res.check("(1,0) is T_{pi/2}-orthogonal to (1,i)", abs(fwd) <= EXACT, fwd)
    res.check("(1,i) is not T_{pi/2}-orthogonal to (1,0)", abs(rev) > EXACT, rev)
    res.check(
        "T_{pi/2}-orthogonality is not left symmetric at (1,0)",
        not is_theta_left_symmetric_at(T, math.pi / 2, e1),
    )
    return res


def _non_bijective() -> FixtureResult:
    res = FixtureResult("non-bijective")
    T = non_bijective_operator()
    d, e1 = np.array([1.0, 1.0]), np.array([1.0, 0.0])
    res.check("T is not bijective", not T.bijective)
    res.check("(1,1) is isotropic", is_isotropic(T, d, EXACT).verdict, pair(T, d, d))
    v = symmetry_verdict(T, d)
    res.check("T-orthogonality is left symmetric at (1,1)", v.left, v.certificate)
    a, b = pair(T, e1, d), pair(T, d, e1)
    res.check("(1,0) is T-orthogonal to (1,1)", abs(a) <= EXACT, a)
    res.check("(1,1) is not T-orthogonal to (1,0)", abs(b) > EXACT, b)
    res.check("T-orthogonality is not right symmetric at (1,1)", not v.right, v.certificate)
    return res


def _lemma_counterexample() -> FixtureResult:
    res = FixtureResult("lemma-counterexample")
    T = lemma_counterexample_operator()
    e1 = np.array([1.0, 0.0])
    res.check("(1,0) is isotropic", is_isotropic(T, e1, EXACT).verdict, pair(T, e1, e1))
    v = symmetry_verdict(T, e1)
    res.check("T-orthogonality is left and right symmetric at (1,0)", v.left and v.right, v.certificate)
    grid = np.linspace(-2.0, 2.0, 5)
    worst_a = worst_b = 0.0
    unequal = True
    for al in grid:
        for be in grid:
            xab = np.array([al, be])
            a = pair(T, xab, e1)
            b = pair(T, e1, xab)
            worst_a = max(worst_a, abs(a - be / math.sqrt(2)))
            worst_b = max(worst_b, abs(b - be))
            if be != 0 and abs(a - b) <= EXACT:
                unequal = False
    res.check("(T(a,b), (1,0)) = b/sqrt2 on a 5x5 grid", worst_a <= EXACT, worst_a)
    res.check("(T(1,0), (a,b)) = b on a 5x5 grid", worst_b <= EXACT, worst_b)
    res.check("the two pairings differ whenever b != 0", unequal)
    return res


FIXTURES: dict[str, Callable[[], FixtureResult]] = {
    "prop-basic-c2": _prop_basic_c2,
    "direction-example": _direction_example,
    "non-bijective": _non_bijective,
    "lemma-counterexample": _lemma_counterexample,
}


def run_fixture(name: str) -> FixtureResult:
    if name not in FIXTURES:
        raise ValueError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}")
    return FIXTURES[name]()


def run_all_fixtures() -> list[FixtureResult]:
    return [fn() for fn in FIXTURES.values()]
