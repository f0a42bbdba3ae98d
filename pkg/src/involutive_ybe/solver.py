"""Construction of involutive solutions of ``A X A = X A X``.

Solutions are first built for the normal form ``D = diag(I_p, -I_{n-p})``
(``n <= 2p``) and then lifted back to ``A = P D P^{-1}``. Apart from the
trivial solution ``Y = D`` there are exactly three families:

* ``alg1``: ``n = 2p``, ``Y = [[-I/2, Y2], [3/4 Y2^{-1}, I/2]]``;
* ``alg2``: ``n - p < p``, ``Y1`` has ``n - p`` eigenvalues ``-1/2`` and ``Y4 = I/2``;
* ``alg3``: ``Y1`` and ``Y4`` both have exactly ``r`` eigenvalues of the
  "foreign" kind (``-1/2`` and ``1/2``), with ``1 <= r < n - p``.
"""

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from .blocks import check_block_identities
from .errors import DimensionError, InadmissibleCaseError, NotInvolutionError
from .involution import DEFAULT_TOL, decompose_involution, sign_matrix
from .linalg import as_square, identity, mat_inverse, random_nonsingular, rel_residual


class SolutionCase(str, enum.Enum):
    TRIVIAL = "trivial"
    ALG1 = "alg1"
    ALG2 = "alg2"
    ALG3 = "alg3"


@dataclass(frozen=True)
class Trivial:
    case = SolutionCase.TRIVIAL


@dataclass(frozen=True, eq=False)
class Alg1:
    y2: np.ndarray
    case = SolutionCase.ALG1


@dataclass(frozen=True, eq=False)
class Alg2:
    p1: np.ndarray
    b2: np.ndarray
    case = SolutionCase.ALG2


@dataclass(frozen=True, eq=False)
class Alg3:
    p1: np.ndarray
    p4: np.ndarray
    f1: np.ndarray
    r: int
    case = SolutionCase.ALG3


SolutionParams = Union[Trivial, Alg1, Alg2, Alg3]


@dataclass(frozen=True)
class ResidualReport:
    ybe_residual: float
    involution_residual: float
    trace_gap: float
    max_block_identity_residual: float

    def passes(self, tol):
        return self.ybe_residual <= tol and self.involution_residual <= tol


def _check_normal_form(n, p):
    if not (1 <= p < n and n <= 2 * p):
        raise DimensionError(f"normal form needs 1 <= p < n <= 2p, got n={n}, p={p}")


def admissibility_rule(case, n, p, r=None):
    """Return ``None`` if ``case`` is admissible for ``(n, p)``, else the violated rule."""
    case = SolutionCase(case)
    q = n - p
    if case is SolutionCase.TRIVIAL:
        return None
    if case is SolutionCase.ALG1:
        return None if n == 2 * p else f"alg1 requires n = 2p (got n={n}, p={p})"
    if case is SolutionCase.ALG2:
        return None if 1 <= q < p else f"alg2 requires 1 <= n-p < p (got n-p={q}, p={p})"
    if r is None:
        return None if 2 <= q <= p else f"alg3 requires 1 <= r < n-p <= p (got n-p={q}, p={p})"
    if 1 <= r < q <= p:
        return None
    return f"alg3 requires 1 <= r < n-p <= p (got r={r}, n-p={q}, p={p})"


def admissible_cases(n, p):
    return [c for c in SolutionCase if admissibility_rule(c, n, p) is None]


def _require(case, n, p, r=None):
    rule = admissibility_rule(case, n, p, r)
    if rule is not None:
        raise InadmissibleCaseError(rule)


def _param(m, size, name):
    m = as_square(m, name)
    if m.shape[0] != size:
        raise DimensionError(f"{name} must be {size}x{size}, got {m.shape}")
    return m


def build_y_trivial(n, p):
    _check_normal_form(n, p)
    return sign_matrix(n, p)


def build_y_alg1(p, y2):
    y2 = _param(y2, p, "Y2")
    y3 = 0.75 * mat_inverse(y2)
    ip = identity(p)
    return np.block([[-0.5 * ip, y2], [y3, 0.5 * ip]])


def build_y_alg2(n, p, p1, b2):
    _check_normal_form(n, p)
    _require(SolutionCase.ALG2, n, p)
    q = n - p
    p1 = _param(p1, p, "P1")
    b2 = _param(b2, q, "B2")
    p1_inv = mat_inverse(p1)
    d1 = np.diag(np.r_[np.full(q, -0.5), np.ones(p - q)])
    y1 = p1 @ d1 @ p1_inv
    y2 = p1 @ np.vstack([b2, np.zeros((p - q, q))])
    y3 = np.hstack([0.75 * mat_inverse(b2), np.zeros((q, p - q))]) @ p1_inv
    return np.block([[y1, y2], [y3, 0.5 * identity(q)]])


def build_y_alg3(n, p, r, p1, p4, f1):
    _check_normal_form(n, p)
    _require(SolutionCase.ALG3, n, p, r)
    q = n - p
    p1 = _param(p1, p, "P1")
    p4 = _param(p4, q, "P4")
    f1 = _param(f1, r, "F1")
    p1_inv = mat_inverse(p1)
    p4_inv = mat_inverse(p4)
    d1 = np.diag(np.r_[np.full(r, -0.5), np.ones(p - r)])
    d4 = np.diag(np.r_[np.full(r, 0.5), -np.ones(q - r)])
    f_block = np.zeros((p, q), dtype=np.complex128)
    f_block[:r, :r] = f1
    g_block = np.zeros((q, p), dtype=np.complex128)
    g_block[:r, :r] = 0.75 * mat_inverse(f1)
    y1 = p1 @ d1 @ p1_inv
    y2 = p1 @ f_block @ p4_inv
    y3 = p4 @ g_block @ p1_inv
    y4 = p4 @ d4 @ p4_inv
    return np.block([[y1, y2], [y3, y4]])


def build_y(n, p, params):
    """Dispatch on the parameter type."""
    if isinstance(params, Trivial):
        return build_y_trivial(n, p)
    if isinstance(params, Alg1):
        _require(SolutionCase.ALG1, n, p)
        return build_y_alg1(p, params.y2)
    if isinstance(params, Alg2):
        return build_y_alg2(n, p, params.p1, params.b2)
    if isinstance(params, Alg3):
        return build_y_alg3(n, p, params.r, params.p1, params.p4, params.f1)
    raise TypeError(f"unknown parameter type {type(params).__name__}")


def lift_solution(dec, y):
    """Map ``Y`` in the solution set of ``D`` to ``X`` in the solution set of ``A``."""
    y = as_square(y, "y")
    if y.shape[0] != dec.n:
        raise DimensionError(f"y must be {dec.n}x{dec.n}, got {y.shape}")
    x = dec.P @ y @ dec.P_inv
    return -x if dec.sign_flip else x


def to_normal_form(dec, x):
    """Inverse of :func:`lift_solution`."""
    y = dec.P_inv @ x @ dec.P
    return -y if dec.sign_flip else y


def verify_solution(a, x, tol=DEFAULT_TOL, dec=None):
    """Residuals certifying that ``x`` is an involutive solution of ``a x a = x a x``.

    The block-identity residual is measured in the eigenbasis of ``a``; pass
    ``dec`` to reuse an existing decomposition. ``a`` must be an involution.
    """
    a = as_square(a, "A")
    x = as_square(x, "X")
    if a.shape != x.shape:
        raise DimensionError(f"A and X differ in shape: {a.shape} vs {x.shape}")
    n = a.shape[0]
    norm_a = np.linalg.norm(a, "fro")
    norm_x = np.linalg.norm(x, "fro")
    ybe = rel_residual(a @ x @ a - x @ a @ x, norm_a * norm_x * norm_a)
    inv = rel_residual(x @ x - identity(n), norm_x)
    gap = float(abs(np.trace(x) - np.trace(a)))

    if dec is None:
        try:
            dec = decompose_involution(a, tol)
        except NotInvolutionError as exc:
            raise NotInvolutionError(f"A must be an involution: {exc}") from None
    if dec.trivial_case is not None:
        blocks = rel_residual(x - a, norm_a)
    else:
        blocks = check_block_identities(to_normal_form(dec, x), dec.p).max_residual
    return ResidualReport(ybe, inv, gap, blocks)


def _child_seeds(seed, count):
    return [int(s) for s in np.random.SeedSequence(seed).generate_state(count)]


def sample_solution(dec, case, seed, r=None):
    """Draw random parameters for ``case`` and return ``(params, X)``.

    For ``alg3`` the rank ``r`` is drawn uniformly from the admissible range
    unless given.
    """
    case = SolutionCase(case)
    if dec.trivial_case is not None:
        if case is not SolutionCase.TRIVIAL:
            raise InadmissibleCaseError(
                f"A = {'+' if dec.trivial_case == 'identity' else '-'}I admits only the trivial solution"
            )
        return Trivial(), dec.a.copy()
    n, p = dec.n, dec.p
    rule = admissibility_rule(case, n, p, r)
    if rule is not None:
        allowed = ", ".join(c.value for c in admissible_cases(n, p))
        raise InadmissibleCaseError(f"{rule}; admissible cases for n={n}, p={p}: {allowed}")

    q = n - p
    s = _child_seeds(seed, 4)
    if case is SolutionCase.TRIVIAL:
        params = Trivial()
    elif case is SolutionCase.ALG1:
        params = Alg1(random_nonsingular(p, s[0]))
    elif case is SolutionCase.ALG2:
        params = Alg2(random_nonsingular(p, s[0]), random_nonsingular(q, s[1]))
    else:
        if r is None:
            r = int(np.random.default_rng(s[3]).integers(1, q))
        params = Alg3(
            random_nonsingular(p, s[0]), random_nonsingular(q, s[1]), random_nonsingular(r, s[2]), r
        )
    return params, lift_solution(dec, build_y(n, p, params))
