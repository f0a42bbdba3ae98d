"""Recover the solution family and its parameters from a solution ``X``.

This inverts :mod:`involutive_ybe.solver`: ``X`` is pulled back to the normal
form ``Y``, the diagonal blocks are inspected, and the parameters are read off
in the eigenbases returned by :func:`~involutive_ybe.quadratic.diagonalize_quadratic`.
The recovered parameters are not canonical; only their re-synthesis is.
"""

import numpy as np

from .blocks import BlockIdentityReport, check_block_identities, split_blocks
from .errors import ConsistencyError, NotASolutionError
from .involution import DEFAULT_TOL
from .linalg import identity, rel_residual
from .quadratic import diagonalize_quadratic
from .solver import Alg1, Alg2, Alg3, Trivial, build_y, lift_solution, to_normal_form, verify_solution

__all__ = [
    "BlockIdentityReport",
    "check_block_identities",
    "classify_solution",
    "resynthesis_error",
]

RESYNTH_TOL = 1e-6


def _deviation(m, target):
    return rel_residual(m - target, np.linalg.norm(m, "fro"))


def resynthesis_error(dec, params, x):
    """``||lift(build(params)) - X||_F / max(1, ||X||_F)``."""
    x_again = lift_solution(dec, build_y(dec.n, dec.p, params))
    return rel_residual(x_again - x, np.linalg.norm(x, "fro"))


def classify_solution(dec, x, tol=DEFAULT_TOL, resynth_tol=RESYNTH_TOL):
    """Return the parameters (``Trivial``, ``Alg1``, ``Alg2`` or ``Alg3``) generating ``x``.

    Raises NotASolutionError if ``x`` fails :func:`verify_solution` at ``tol``
    and ConsistencyError if the block structure contradicts the case analysis.
    """
    report = verify_solution(dec.a, x, tol, dec=dec)
    if not report.passes(tol):
        raise NotASolutionError(
            f"X is not an involutive solution (ybe residual {report.ybe_residual:.3e}, "
            f"involution residual {report.involution_residual:.3e}, tol {tol:.1e})"
        )
    x = np.asarray(x, dtype=np.complex128)
    if dec.trivial_case is not None:
        if rel_residual(x - dec.a, np.linalg.norm(dec.a, "fro")) > tol:
            raise ConsistencyError("A = +-I admits X = A only")
        return Trivial()

    n, p = dec.n, dec.p
    q = n - p
    y = to_normal_form(dec, x)
    y1, y2, _, y4 = split_blocks(y, p)
    ip, iq = identity(p), identity(q)

    if _deviation(y1, ip) <= tol:
        if _deviation(y, dec.D) > tol:
            raise ConsistencyError("Y1 = I forces Y = D, but Y differs from D")
        params = Trivial()
    elif _deviation(y1, -0.5 * ip) <= tol:
        if n != 2 * p:
            raise ConsistencyError(f"Y1 = -I/2 forces n = 2p, got n={n}, p={p}")
        if _deviation(y4, 0.5 * iq) > tol:
            raise ConsistencyError("Y1 = -I/2 forces Y4 = I/2")
        params = Alg1(y2.copy())
    else:
        split1 = diagonalize_quadratic(y1, -0.5, 1.0, tol)
        r = split1.k
        if _deviation(y4, 0.5 * iq) <= tol:
            if r != q:
                raise ConsistencyError(f"Y4 = I/2 forces r = n - p = {q}, got r={r}")
            b2 = (split1.P_inv @ y2)[:q, :]
            params = Alg2(split1.P.copy(), b2)
        else:
            split4 = diagonalize_quadratic(y4, 0.5, -1.0, tol)
            if split4.k != r:
                raise ConsistencyError(
                    f"Y1 and Y4 must share the number r of -1/2 and 1/2 eigenvalues, "
                    f"got {r} and {split4.k}"
                )
            if not 1 <= r < q:
                raise ConsistencyError(f"need 1 <= r < n - p, got r={r}, n-p={q}")
            f1 = (split1.P_inv @ y2 @ split4.P)[:r, :r]
            params = Alg3(split1.P.copy(), split4.P.copy(), f1, r)

    err = resynthesis_error(dec, params, x)
    if err > resynth_tol:
        raise ConsistencyError(
            f"{params.case.value} parameters do not reproduce X (error {err:.3e} > {resynth_tol:.1e})"
        )
    return params
