"""Quadratic matrices: ``(M - alpha I)(M - beta I) = 0`` with ``alpha != beta``.

Such a matrix is diagonalizable with spectrum in {alpha, beta}, and
``(M - beta I) / (alpha - beta)`` is the spectral projector onto the
alpha-eigenspace. We extract eigenvectors from the two projectors directly
instead of going through a Schur form.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotQuadraticError
from .linalg import RANK_RTOL, as_square, column_space_basis, identity, mat_inverse, rel_residual

DEFAULT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class QuadraticSplit:
    """``M == P @ diag(alpha I_k, beta I_{m-k}) @ P_inv``."""

    P: np.ndarray
    P_inv: np.ndarray
    k: int
    alpha: complex
    beta: complex

    @property
    def m(self):
        return self.P.shape[0]

    @property
    def eigenvalues(self):
        return np.r_[np.full(self.k, self.alpha), np.full(self.m - self.k, self.beta)]

    def reconstruct(self):
        return self.P @ np.diag(self.eigenvalues) @ self.P_inv


def verify_quadratic(m, alpha, beta):
    """``||(M - alpha I)(M - beta I)||_F / max(1, ||M||_F**2)``."""
    m = as_square(m)
    eye = identity(m.shape[0])
    product = (m - alpha * eye) @ (m - beta * eye)
    return rel_residual(product, np.linalg.norm(m, "fro") ** 2)


def diagonalize_quadratic(m, alpha, beta, tol=DEFAULT_TOL, rank_tol=RANK_RTOL):
    m = as_square(m)
    if alpha == beta:
        raise ValueError("alpha and beta must differ")
    residual = verify_quadratic(m, alpha, beta)
    if residual > tol:
        raise NotQuadraticError(
            f"matrix does not satisfy (M - {alpha}I)(M - {beta}I) = 0 "
            f"(residual {residual:.3e} > {tol:.1e})"
        )
    size = m.shape[0]
    eye = identity(size)
    scale = np.linalg.norm(m, "fro")
    # scalar matrices first: the projector route needs both eigenspaces non-empty
    if rel_residual(m - alpha * eye, scale) <= tol:
        return QuadraticSplit(eye, eye, size, complex(alpha), complex(beta))
    if rel_residual(m - beta * eye, scale) <= tol:
        return QuadraticSplit(eye, eye, 0, complex(alpha), complex(beta))

    alpha_basis = column_space_basis((m - beta * eye) / (alpha - beta), rank_tol)
    beta_basis = column_space_basis((m - alpha * eye) / (beta - alpha), rank_tol)
    k = alpha_basis.shape[1]
    if k + beta_basis.shape[1] != size:
        raise NotQuadraticError(
            f"eigenspace dimensions {k} + {beta_basis.shape[1]} do not add up to {size}"
        )
    P = np.hstack([alpha_basis, beta_basis])
    return QuadraticSplit(P, mat_inverse(P), k, complex(alpha), complex(beta))
