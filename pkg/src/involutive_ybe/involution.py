"""Involutory matrices and their eigenspace decomposition.

Every involution ``A`` is diagonalizable with spectrum in {1, -1}. We write
``A = P diag(I_p, -I_{n-p}) P^{-1}`` and, when fewer than half of the
eigenvalues equal 1, decompose ``-A`` instead so that ``n <= 2p`` always holds
for the working matrix.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConsistencyError, NotInvolutionError
from .linalg import (
    RANK_RTOL,
    as_square,
    column_space_basis,
    identity,
    mat_inverse,
    random_nonsingular,
    rel_residual,
)

DEFAULT_TOL = 1e-8

PLUS_IDENTITY = "identity"
MINUS_IDENTITY = "minus_identity"


def sign_matrix(n, p):
    """``diag(I_p, -I_{n-p})`` as a complex matrix."""
    return np.diag(np.r_[np.ones(p), -np.ones(n - p)]).astype(np.complex128)


def is_involution(a, tol=DEFAULT_TOL):
    """Return ``(ok, residual)`` with residual ``||A^2 - I||_F / max(1, ||A||_F)``."""
    a = as_square(a)
    n = a.shape[0]
    residual = rel_residual(a @ a - identity(n), np.linalg.norm(a, "fro"))
    return residual <= tol, residual


@dataclass(frozen=True, eq=False)
class InvolutionDecomposition:
    """``(-1)**sign_flip * a == P @ diag(I_p, -I_{n-p}) @ P_inv``.

    For ``a = +-I`` the decomposition is trivial: ``P`` is the identity,
    ``trivial_case`` names which one, and ``p == n``.
    """

    a: np.ndarray
    n: int
    p: int
    P: np.ndarray
    P_inv: np.ndarray
    sign_flip: bool
    trivial_case: Optional[str] = None

    @property
    def D(self):
        return sign_matrix(self.n, self.p)

    @property
    def working_matrix(self):
        """The matrix actually decomposed: ``a`` or ``-a``."""
        return -self.a if self.sign_flip else self.a

    def reconstruction_residual(self):
        diff = self.working_matrix - self.P @ self.D @ self.P_inv
        return rel_residual(diff, np.linalg.norm(self.a, "fro"))


def decompose_involution(a, tol=DEFAULT_TOL, rank_tol=RANK_RTOL):
    a = as_square(a)
    n = a.shape[0]
    ok, residual = is_involution(a, tol)
    if not ok:
        raise NotInvolutionError(f"matrix is not an involution (residual {residual:.3e} > {tol:.1e})")

    eye = identity(n)
    scale = np.linalg.norm(a, "fro")
    for case, sign in ((PLUS_IDENTITY, 1.0), (MINUS_IDENTITY, -1.0)):
        if rel_residual(a - sign * eye, scale) <= tol:
            return InvolutionDecomposition(
                a=a, n=n, p=n, P=eye, P_inv=eye, sign_flip=sign < 0, trivial_case=case
            )

    plus_basis = column_space_basis((eye + a) / 2, rank_tol)
    sign_flip = 2 * plus_basis.shape[1] < n
    work = -a if sign_flip else a
    if sign_flip:
        plus_basis = column_space_basis((eye + work) / 2, rank_tol)
    minus_basis = column_space_basis((eye - work) / 2, rank_tol)
    p = plus_basis.shape[1]
    if p + minus_basis.shape[1] != n:
        raise ConsistencyError(
            f"eigenspace dimensions {p} + {minus_basis.shape[1]} do not add up to n={n}"
        )
    P = np.hstack([plus_basis, minus_basis])
    return InvolutionDecomposition(
        a=a, n=n, p=p, P=P, P_inv=mat_inverse(P), sign_flip=bool(sign_flip)
    )


def random_involution(n, n_plus, seed):
    """``Q diag(I_{n_plus}, -I_{n-n_plus}) Q^{-1}`` for a random well-conditioned ``Q``."""
    if not 0 <= n_plus <= n:
        raise ValueError("need 0 <= n_plus <= n")
    q = random_nonsingular(n, seed)
    return q @ sign_matrix(n, n_plus) @ mat_inverse(q)
