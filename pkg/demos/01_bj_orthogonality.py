"""
Birkhoff-James orthogonality in l_p
===================================

Two ways to decide whether ``x`` is BJ orthogonal to ``y``: minimize
``||x + lam y||`` directly, or evaluate the support functional at ``x``.
"""

import numpy as np

from banach_ortho import (
    PNormSpace,
    bj_minimize,
    is_bj_orthogonal,
    is_bj_orthogonal_smooth,
    support_functional,
)

l3 = PNormSpace(2, 3)
x, y = np.array([1.0, 2.0]), np.array([2.0, -1.0])

# orthogonal for the dot product, but not in l_3
print("x . y =", x @ y)
lam, m = bj_minimize(l3, x, y)
print(f"min ||x + lam y||_3 = {m:.6f} at lam = {lam:.6f}; ||x||_3 = {9 ** (1 / 3):.6f}")

f = support_functional(l3, x)
print("support functional at x:", f, "  f(y) =", f @ y)
print("minimization verdict:", is_bj_orthogonal(l3, x, y))
print("functional verdict:  ", is_bj_orthogonal_smooth(l3, x, y))

# the functional kernel always gives an orthogonal direction
y_perp = np.array([-f[1], f[0]])
print("x _|_B (-f2, f1):", is_bj_orthogonal(l3, x, y_perp).verdict)

# complex scalars work the same way
c3 = PNormSpace(3, 1.5, "complex")
rng = np.random.default_rng(0)
z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
w = rng.standard_normal(3) + 1j * rng.standard_normal(3)
print("complex pair, both oracles:",
      is_bj_orthogonal(c3, z, w).verdict, is_bj_orthogonal_smooth(c3, z, w).verdict)
