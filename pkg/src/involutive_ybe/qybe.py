"""Quantum Yang-Baxter equation on ``C^m ⊗ C^m`` and its matrix-equation lift.

If an involution ``Z`` satisfies
``(I ⊗ Z)(Z ⊗ I)(I ⊗ Z) = (Z ⊗ I)(I ⊗ Z)(Z ⊗ I)`` then ``A = I ⊗ Z`` and
``X = Z ⊗ I`` are involutions with ``A X A = X A X``.
"""

import numpy as np

from .errors import DimensionError, NotASolutionError, NotInvolutionError
from .involution import DEFAULT_TOL, is_involution
from .linalg import as_square, identity, kron, rel_residual
from .solver import verify_solution


def _check_size(z, m):
    z = as_square(z, "Z")
    if m < 1 or z.shape[0] != m * m:
        raise DimensionError(f"Z must be m^2 x m^2 = {m * m}x{m * m} for m={m}, got {z.shape}")
    return z


def swap_operator(m):
    """The flip ``e_i ⊗ e_j -> e_j ⊗ e_i`` on ``C^m ⊗ C^m``."""
    z = np.zeros((m * m, m * m), dtype=np.complex128)
    for i in range(m):
        for j in range(m):
            z[j * m + i, i * m + j] = 1.0
    return z


def qybe_residual(z, m):
    """``||L - R||_F / max(1, ||I⊗Z||_F^2 ||Z⊗I||_F)`` for the two sides L, R."""
    z = _check_size(z, m)
    left_z = kron(identity(m), z)
    right_z = kron(z, identity(m))
    lhs = left_z @ right_z @ left_z
    rhs = right_z @ left_z @ right_z
    scale = np.linalg.norm(left_z, "fro") ** 2 * np.linalg.norm(right_z, "fro")
    return rel_residual(lhs - rhs, scale)


def lift_to_pair(z, m, tol=DEFAULT_TOL):
    """Return ``(I_m ⊗ Z, Z ⊗ I_m)`` after checking ``Z`` is an involutive QYBE solution."""
    z = _check_size(z, m)
    ok, residual = is_involution(z, tol)
    if not ok:
        raise NotInvolutionError(f"Z is not an involution (residual {residual:.3e})")
    residual = qybe_residual(z, m)
    if residual > tol:
        raise NotASolutionError(f"Z does not satisfy the QYBE (residual {residual:.3e})")
    a = kron(identity(m), z)
    x = kron(z, identity(m))
    report = verify_solution(a, x, tol)
    if not report.passes(tol):
        raise NotASolutionError(f"lifted pair fails A X A = X A X: {report}")
    return a, x
