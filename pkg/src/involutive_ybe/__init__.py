"""Involutive solutions of the Yang-Baxter-like matrix equation ``A X A = X A X``."""

__version__ = "0.1.0"

from .blocks import BlockIdentityReport, check_block_identities
from .classify import classify_solution
from .errors import (
    ConsistencyError,
    DimensionError,
    InadmissibleCaseError,
    NotASolutionError,
    NotInvolutionError,
    NotQuadraticError,
    SingularMatrixError,
    YBEError,
)
from .families import FamilyPoint, family_k2_3x3, family_k3_3x3, family_k_2x2, membership_2x2, membership_3x3
from .involution import InvolutionDecomposition, decompose_involution, is_involution, random_involution
from .linalg import column_space_basis, fro_norm, kron, mat_inverse, mat_mul, random_nonsingular
from .quadratic import QuadraticSplit, diagonalize_quadratic, verify_quadratic
from .qybe import lift_to_pair, qybe_residual, swap_operator
from .solver import (
    Alg1,
    Alg2,
    Alg3,
    ResidualReport,
    SolutionCase,
    Trivial,
    build_y,
    build_y_alg1,
    build_y_alg2,
    build_y_alg3,
    build_y_trivial,
    lift_solution,
    sample_solution,
    verify_solution,
)
