"""Closed-form solution families for ``D = diag(1, -1)`` and ``D = diag(1, 1, -1)``.

For ``n = 2`` the solution set is ``{D} ∪ K`` with the one-parameter family
``K(t) = [[-1/2, t], [3/(4t), 1/2]]``. For ``n = 3`` it splits into ``{D}``,
a two-parameter family ``K2(u, t2)`` and a three-parameter family
``K3(b2, c2, t3)``; the fitters below recover the parameters by reading
designated entries and then checking the whole matrix.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .involution import sign_matrix
from .linalg import as_square, rel_residual

D2 = "D2"
K = "K"
D3 = "D3"
K2 = "K2"
K3 = "K3"

_PARAM_COUNT = {D2: 0, K: 1, D3: 0, K2: 2, K3: 3}
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class FamilyPoint:
    family_tag: str
    params: Tuple[complex, ...] = ()

    def __post_init__(self):
        if self.family_tag not in _PARAM_COUNT:
            raise ValueError(f"unknown family tag {self.family_tag!r}")
        if len(self.params) != _PARAM_COUNT[self.family_tag]:
            raise ValueError(
                f"{self.family_tag} takes {_PARAM_COUNT[self.family_tag]} parameters, "
                f"got {len(self.params)}"
            )

    def matrix(self):
        if self.family_tag == D2:
            return sign_matrix(2, 1)
        if self.family_tag == D3:
            return sign_matrix(3, 2)
        return {K: family_k_2x2, K2: family_k2_3x3, K3: family_k3_3x3}[self.family_tag](*self.params)


def _nonzero(value, name):
    if value == 0:
        raise ValueError(f"{name} must be nonzero")
    return complex(value)


def family_k_2x2(t):
    t = _nonzero(t, "t")
    return np.array([[-0.5, t], [3 / (4 * t), 0.5]], dtype=np.complex128)


def family_k2_3x3(u, t2):
    # u = 0 is still a solution (and lies in no other family), so only t2 is restricted
    u = complex(u)
    t2 = _nonzero(t2, "t2")
    return np.array(
        [
            [1.0, 0.0, 0.0],
            [-1.5 * u, -0.5, t2],
            [3 * u / (4 * t2), 3 / (4 * t2), 0.5],
        ],
        dtype=np.complex128,
    )


def family_k3_3x3(b2, c2, t3):
    b2, c2 = complex(b2), complex(c2)
    t3 = _nonzero(t3, "t3")
    bc = b2 * c2
    return np.array(
        [
            [-0.5 - 1.5 * bc, 1.5 * b2, t3],
            [-1.5 * c2 * (1 + bc), 1 + 1.5 * bc, c2 * t3],
            [3 * (1 + bc) / (4 * t3), -3 * b2 / (4 * t3), 0.5],
        ],
        dtype=np.complex128,
    )


def _matches(y, candidate, tol):
    return rel_residual(y - candidate, np.linalg.norm(y, "fro")) <= tol


def membership_2x2(y, tol=DEFAULT_TOL) -> Optional[FamilyPoint]:
    """Return the family point ``y`` belongs to, or ``None``."""
    y = as_square(y, "y")
    if y.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {y.shape}")
    if _matches(y, sign_matrix(2, 1), tol):
        return FamilyPoint(D2)
    t = y[0, 1]
    if t != 0 and _matches(y, family_k_2x2(t), tol):
        return FamilyPoint(K, (complex(t),))
    return None


def fit_k2_3x3(y, tol=DEFAULT_TOL) -> Optional[FamilyPoint]:
    y = as_square(y, "y")
    t2 = y[1, 2]
    if t2 == 0:
        return None
    u = -2 * y[1, 0] / 3
    if _matches(y, family_k2_3x3(u, t2), tol):
        return FamilyPoint(K2, (complex(u), complex(t2)))
    return None


def fit_k3_3x3(y, tol=DEFAULT_TOL) -> Optional[FamilyPoint]:
    y = as_square(y, "y")
    t3 = y[0, 2]
    if t3 == 0:
        return None
    c2 = y[1, 2] / t3
    b2 = 2 * y[0, 1] / 3
    if _matches(y, family_k3_3x3(b2, c2, t3), tol):
        return FamilyPoint(K3, (complex(b2), complex(c2), complex(t3)))
    return None


def membership_3x3(y, tol=DEFAULT_TOL) -> Optional[FamilyPoint]:
    """Locate ``y`` in ``{D} ∪ K2 ∪ K3`` for ``D = diag(1, 1, -1)``."""
    y = as_square(y, "y")
    if y.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got {y.shape}")
    if _matches(y, sign_matrix(3, 2), tol):
        return FamilyPoint(D3)
    return fit_k2_3x3(y, tol) or fit_k3_3x3(y, tol)
