"""
Orthogonality induced by a pairing
==================================

A linear map ``T: X -> X*`` is stored as a matrix whose column ``j`` holds
``T(e_j)``.  Then ``(Tx, y) = y^T M x`` and ``x`` is T-orthogonal to ``y``
when this vanishes.
"""

import math

import numpy as np

from banach_ortho import (
    PairingOperator,
    pair,
    pair_theta,
    sign_class,
    t_perp_basis,
    theta_direction,
)

# T(1,0) = 7i (1,0)* + (0,1)*,  T(0,1) = 2 (1,0)* + 3i (0,1)*
T = PairingOperator.from_columns([[7j, 1], [2, 3j]], "complex")
x, y = np.array([0, 1]), np.array([0.5, -1 / 3])

print("(Tx, y) =", pair(T, x, y))
d = theta_direction(T, x, y)
print(f"direction annihilating the pairing: theta = {d.theta:.6f} (pi/4 = {math.pi / 4:.6f})")
print("real pairing along theta:", pair_theta(T, d.theta, x, y))

for th in (0.0, math.pi / 2, math.pi):
    print(f"  theta = {th:.3f}: class {sign_class(T, th, x, y).value}")

# everything T-orthogonal to x
B = t_perp_basis(T, x)
print("basis of the T-orthogonal complement of x:", B)
print("check:", [pair(T, x, b) for b in B])
