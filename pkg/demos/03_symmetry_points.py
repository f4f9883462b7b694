"""
Where is T-orthogonality symmetric?
===================================

At a point ``x`` left symmetry asks ``x _|_T y => y _|_T x`` for every ``y``.
It reduces to collinearity of ``Mx`` and ``M^T x``.
"""

import math

import numpy as np

from banach_ortho import (
    PairingOperator,
    halfspace_symmetry_check,
    is_theta_left_symmetric_at,
    symmetry_scalar,
    symmetry_verdict,
)

# T(1,0) = i (0,1)*,  T(0,1) = (1,0)* + 3i (0,1)*
T = PairingOperator.from_columns([[0, 1j], [1, 3j]], "complex")
e1 = np.array([1.0, 0.0])

v = symmetry_verdict(T, e1)
print("at (1,0):", v.left, v.right, "lambda =", symmetry_scalar(T, e1))
print("theta = pi/2 version:", is_theta_left_symmetric_at(T, math.pi / 2, e1))

rep = halfspace_symmetry_check(T, e1, samples=300)
print(f"sign classes rotate by phi0 = {rep.phi0:.4f}: holds = {rep.holds}")

# a point where symmetry fails, with a counterexample
rep = halfspace_symmetry_check(T, [0, 1], samples=300)
print("at (0,1): holds =", rep.holds)
print("  counterexample:", rep.counterexample["forward"], "->", rep.counterexample["reversed"])

# a singular pairing: left symmetric but not right symmetric
S = PairingOperator.from_columns([[1, -1], [2, -2]])
print("singular pairing at (1,1):", symmetry_verdict(S, [1, 1]))
