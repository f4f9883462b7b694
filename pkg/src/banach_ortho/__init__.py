"""T-orthogonality, Birkhoff-James orthogonality and symmetry points in
finite-dimensional real and complex l_p spaces."""

from .pairing import (
    PairingOperator,
    SignClass,
    ThetaDirection,
    is_isotropic,
    is_T_orthogonal,
    is_T_theta_orthogonal,
    pair,
    pair_theta,
    sign_class,
    t_perp_basis,
    theta_direction,
)
from .preserve import (
    FitReport,
    adjoint_conjugate,
    hilbert_fit,
    is_T_isometry,
    lp_pairing_structure_check,
    preserver_scalar,
    preserves_T_orthogonality_sampled,
    rotation_bj_deviation,
    two_dim_hilbert_conditions,
)
from .space import (
    DEFAULT_TOL,
    OrthResult,
    PNormSpace,
    ScalarField,
    bj_minimize,
    inverse_duality,
    is_bj_orthogonal,
    is_bj_orthogonal_smooth,
    is_isosceles_orthogonal,
    norm_attainment_direction,
    p_norm,
    space_properties,
    support_functional,
)
from .symmetry import (
    SymmetryVerdict,
    find_nonisotropic,
    halfspace_symmetry_check,
    is_left_symmetric_at,
    is_operator_symmetric,
    is_right_symmetric_at,
    is_theta_left_symmetric_at,
    reversed_functional,
    symmetry_scalar,
    symmetry_verdict,
)

__version__ = "0.1.0"
