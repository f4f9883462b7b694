"""
Maps preserving T-orthogonality
===============================

``A`` preserves T-orthogonality in both directions when ``A^T M A`` is a
nonzero multiple of ``M``.
"""

import numpy as np

from banach_ortho import (
    adjoint_conjugate,
    is_T_isometry,
    preserver_scalar,
    preserves_T_orthogonality_sampled,
)
from banach_ortho.sampling import random_symmetric_pairing, random_t_isometry

rng = np.random.default_rng(7)
T, R = random_symmetric_pairing(rng, 3)
A = random_t_isometry(rng, T, R)

print("A is a T-isometry:", is_T_isometry(T, A))
print("beta for 2A:", preserver_scalar(T, 2 * A))
print("sampled preservation:", preserves_T_orthogonality_sampled(T, 2 * A, 300).holds)

B = rng.standard_normal((3, 3))
print("generic B: beta =", preserver_scalar(T, B))
res = preserves_T_orthogonality_sampled(T, B, 300)
x, y = res.counterexample
print("counterexample: (Tx,y) =", T.M @ x @ y, " (TBx,By) =", adjoint_conjugate(T, B).M @ x @ y)
