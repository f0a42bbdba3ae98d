"""Brute-force checks that share no code with the numerical library.

Everything here multiplies with explicit Python loops over nested lists, so a
bug in the numpy-based path cannot hide itself.
"""

import math

import numpy as np


def _to_lists(m):
    return [[complex(v) for v in row] for row in m]


def naive_matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0j] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            s = 0j
            for t in range(k):
                s += a[i][t] * b[t][j]
            out[i][j] = s
    return out


def _max_abs(m):
    return max(abs(v) for row in m for v in row)


def _max_abs_diff(a, b):
    return max(abs(x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def exhaustive_identity_check(y, d, tol=1e-10):
    """Entrywise check of ``D Y D == Y D Y`` and ``Y Y == I``.

    Differences are compared against ``tol`` scaled by the magnitude the
    products can reach, ``n**2 * max|Y|**2 * max|D|``.
    """
    y, d = _to_lists(y), _to_lists(d)
    n = len(y)
    if len(d) != n or any(len(row) != n for row in y + d):
        return False
    ymax, dmax = _max_abs(y), _max_abs(d)
    scale = max(1.0, n * n * ymax * ymax * max(dmax, 1.0))
    dyd = naive_matmul(naive_matmul(d, y), d)
    ydy = naive_matmul(naive_matmul(y, d), y)
    yy = naive_matmul(y, y)
    eye = [[1 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    return _max_abs_diff(dyd, ydy) <= tol * scale and _max_abs_diff(yy, eye) <= tol * scale


def _ybe_residual_2x2(x):
    # A = diag(1, -1); Frobenius norm of A X A - X A X by direct expansion
    a = [[1.0, 0.0], [0.0, -1.0]]
    axa = naive_matmul(naive_matmul(a, x), a)
    xax = naive_matmul(naive_matmul(x, a), x)
    return math.sqrt(sum(abs(axa[i][j] - xax[i][j]) ** 2 for i in range(2) for j in range(2)))


def grid_values(lo, hi, step):
    """Grid points ``lo, lo+step, ..., hi`` computed from integer multiples of ``step``."""
    k_lo = math.ceil(lo / step - 1e-9)
    k_hi = math.floor(hi / step + 1e-9)
    return [round(k * step, 12) for k in range(k_lo, k_hi + 1)]


def enumerate_involutions_2x2(grid_step, lo=-3.0, hi=3.0):
    """Real involutions ``[[a, b], [c, -a]]`` with ``a^2 + bc = 1`` over an (a, b) grid,
    plus ``diag(1, -1)`` and ``diag(-1, 1)``."""
    out = [[[1.0, 0.0], [0.0, -1.0]], [[-1.0, 0.0], [0.0, 1.0]]]
    a_grid = grid_values(lo, hi, grid_step)
    b_grid = [b for b in grid_values(lo, hi, grid_step) if b != 0.0]
    for a in a_grid:
        for b in b_grid:
            out.append([[a, b], [(1.0 - a * a) / b, -a]])
    return out


def grid_solutions_2x2(grid_step=0.05, tol=1e-8, lo=-3.0, hi=3.0):
    """Grid points that solve ``A X A = X A X`` for ``A = diag(1, -1)``.

    Residuals are absolute Frobenius norms, evaluated by direct triple products.
    """
    if grid_step <= 0:
        raise ValueError("grid_step must be positive")
    hits = []
    for x in enumerate_involutions_2x2(grid_step, lo, hi):
        x = _to_lists(x)
        residual = _ybe_residual_2x2(x)
        if residual <= tol:
            hits.append(np.array(x, dtype=np.complex128))
    return hits


def spot_check_2x2(a, b):
    """Residual of the complex involution ``[[a, b], [(1 - a^2)/b, -a]]``; ``b != 0``."""
    x = [[complex(a), complex(b)], [(1 - complex(a) ** 2) / complex(b), -complex(a)]]
    return x, _ybe_residual_2x2(x)
