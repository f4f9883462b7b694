"""
Can a pairing reproduce BJ orthogonality?
=========================================

Fit a matrix ``M`` so that every sampled BJ-orthogonal pair is also
T-orthogonal.  Only Euclidean norms admit an exact fit.
"""

import math

import numpy as np

from banach_ortho import PNormSpace, hilbert_fit, rotation_bj_deviation, two_dim_hilbert_conditions
from banach_ortho.pairing import PairingOperator

for space in (PNormSpace(2, 2), PNormSpace(3, 2), PNormSpace(2, 1.5),
              PNormSpace(2, 3), PNormSpace(2, 2, "complex")):
    rep = hilbert_fit(space, samples=200, seed=42)
    print(f"n={space.n} p={space.p} {space.field.value:7s} residual {rep.residual:.3e}")

# (a, b) against (b, -a)
for p in (2, 1.5, 3, math.inf):
    gap, wit = rotation_bj_deviation(p)
    print(f"p={p}: worst gap {gap:.4g} at {wit}")

rep = two_dim_hilbert_conditions(PNormSpace(2, 4), PairingOperator(np.eye(2)), [1, 0], [0, 1])
print("l_4 norm identity violation:", rep.norm_identity, "at", rep.norm_identity_witness)
