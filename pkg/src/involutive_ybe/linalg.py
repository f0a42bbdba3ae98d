"""Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every public
function validates its inputs through :func:`as_cmatrix`, which rejects
non-2D or non-finite data.
"""

import warnings

import numpy as np
import scipy.linalg

from .errors import DimensionError, SingularMatrixError, YBEError

#: smallest/largest LU pivot ratio below which a matrix is declared singular
SINGULAR_RTOL = 1e-12
#: default rank threshold for :func:`column_space_basis`
RANK_RTOL = 1e-10
#: pivot-ratio guard used when drawing random parameter matrices
CONDITION_GUARD = 1e-3
MAX_RESAMPLES = 100


def as_cmatrix(a, name="matrix"):
    """Return ``a`` as a 2-D complex128 array with finite entries."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"{name} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise YBEError(f"{name} contains NaN or Inf entries")
    return arr


def as_square(a, name="matrix"):
    arr = as_cmatrix(a, name)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    return arr


def identity(n):
    return np.eye(n, dtype=np.complex128)


def mat_mul(a, b):
    a = as_cmatrix(a, "a")
    b = as_cmatrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b):
    """Kronecker product: the block matrix whose (i, j) block is ``a[i, j] * b``."""
    return np.kron(as_cmatrix(a, "a"), as_cmatrix(b, "b"))


def fro_norm(a):
    return float(np.linalg.norm(as_cmatrix(a), "fro"))


def _lu_factor(a):
    # singular inputs are reported through our own pivot test, not scipy's warning
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        return scipy.linalg.lu_factor(a, check_finite=False)


def lu_pivots(a):
    """Moduli of the pivots of a partial-pivoting LU factorization of ``a``."""
    lu, _ = _lu_factor(as_square(a))
    return np.abs(np.diag(lu))


def mat_inverse(a):
    """Inverse of a square matrix via LU with row pivoting.

    Raises SingularMatrixError when the smallest pivot is below
    ``SINGULAR_RTOL`` times the largest one.
    """
    a = as_square(a)
    lu, piv = _lu_factor(a)
    pivots = np.abs(np.diag(lu))
    smallest, largest = float(pivots.min()), float(pivots.max())
    if largest == 0.0 or smallest < SINGULAR_RTOL * largest:
        raise SingularMatrixError(
            f"matrix is singular to working precision (smallest pivot {smallest:.3e}, "
            f"largest {largest:.3e})",
            smallest_pivot=smallest,
        )
    return scipy.linalg.lu_solve((lu, piv), identity(a.shape[0]), check_finite=False)


def column_space_basis(a, tol=RANK_RTOL):
    """Basis of the numerical column space of ``a``.

    Gaussian elimination with complete pivoting selects pivot columns; the
    returned basis consists of the corresponding columns of ``a`` itself.
    Elimination stops once the largest remaining entry drops below ``tol``
    times the first (largest) pivot. A rank-0 input yields an ``(m, 0)`` array.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_cmatrix(a)
    m, n = a.shape
    work = a.copy()
    cols = np.arange(n)
    chosen = []
    first_pivot = None
    for k in range(min(m, n)):
        sub = np.abs(work[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        pivot = sub[i, j]
        if first_pivot is None:
            if pivot == 0.0:
                break
            first_pivot = pivot
        elif pivot <= tol * first_pivot:
            break
        i += k
        j += k
        work[[k, i], :] = work[[i, k], :]
        work[:, [k, j]] = work[:, [j, k]]
        cols[[k, j]] = cols[[j, k]]
        chosen.append(cols[k])
        factors = work[k + 1:, k] / work[k, k]
        work[k + 1:, k:] -= np.outer(factors, work[k, k:])
    return a[:, sorted(chosen)]


def random_nonsingular(n, seed, guard=CONDITION_GUARD):
    """Deterministic random complex ``n x n`` matrix with a healthy LU pivot ratio.

    Real and imaginary parts are uniform on [-1, 1]. Draws are repeated until
    the smallest LU pivot exceeds ``guard * max(1, largest pivot)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_RESAMPLES):
        m = rng.uniform(-1.0, 1.0, (n, n)) + 1j * rng.uniform(-1.0, 1.0, (n, n))
        piv = lu_pivots(m)
        if piv.min() > guard * max(1.0, piv.max()):
            return m
    raise YBEError(f"could not draw a well-conditioned {n}x{n} matrix in {MAX_RESAMPLES} tries")


def rel_residual(diff, scale):
    """``||diff||_F / max(1, scale)``."""
    return float(np.linalg.norm(diff, "fro") / max(1.0, scale))
