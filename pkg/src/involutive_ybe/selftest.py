"""Cross-checks between the numerical library and the brute-force oracle."""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from .families import membership_2x2
from .involution import decompose_involution, random_involution, sign_matrix
from .oracle import exhaustive_identity_check, grid_solutions_2x2
from .solver import admissible_cases, sample_solution, verify_solution

NEGATIVE_MIN_RESIDUAL = 1e-4


@dataclass
class AgreementResult:
    positives: int = 0
    negatives: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements


def _random_shape(rng, max_n):
    n = int(rng.integers(2, max_n + 1))
    p = int(rng.integers((n + 1) // 2, n))
    return n, p


def oracle_agreement(trials, seed=0, max_n=8, tol=1e-8):
    """Run ``trials`` constructed solutions and ``trials`` non-solutions through both
    the oracle and :func:`verify_solution`; record every verdict mismatch."""
    rng = np.random.default_rng(seed)
    result = AgreementResult()
    for i in range(trials):
        n, p = _random_shape(rng, max_n)
        d = sign_matrix(n, p)
        dec = decompose_involution(d)
        case = rng.choice([c.value for c in admissible_cases(n, p)])
        params, y = sample_solution(dec, case, int(rng.integers(2**31)))
        main = verify_solution(d, y, tol, dec=dec).passes(tol)
        oracle = exhaustive_identity_check(y, d)
        result.positives += 1
        if main != oracle or not main:
            result.disagreements.append(
                f"positive #{i} (n={n}, p={p}, {params.case.value}): main={main}, oracle={oracle}"
            )

    done = 0
    while done < trials:
        n, p = _random_shape(rng, max_n)
        d = sign_matrix(n, p)
        x = random_involution(n, p, int(rng.integers(2**31)))
        report = verify_solution(d, x, tol)
        if report.ybe_residual < NEGATIVE_MIN_RESIDUAL:
            continue
        done += 1
        result.negatives += 1
        main = report.passes(tol)
        oracle = exhaustive_identity_check(x, d)
        if main != oracle or main:
            result.disagreements.append(
                f"negative (n={n}, p={p}): main={main}, oracle={oracle}"
            )
    return result


def grid_completeness(grid_step=0.05, tol=1e-8):
    """Return ``(hits, rejected)`` for the 2x2 grid search against the closed-form families."""
    hits = grid_solutions_2x2(grid_step, tol)
    rejected = [x for x in hits if membership_2x2(x, tol) is None]
    return hits, rejected
