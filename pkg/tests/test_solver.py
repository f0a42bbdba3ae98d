import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involutive_ybe.blocks import check_block_identities, split_blocks
from involutive_ybe.errors import DimensionError, InadmissibleCaseError, SingularMatrixError
from involutive_ybe.involution import decompose_involution, random_involution, sign_matrix
from involutive_ybe.oracle import exhaustive_identity_check
from involutive_ybe.solver import (
    Alg1,
    Alg3,
    SolutionCase,
    Trivial,
    admissible_cases,
    build_y,
    build_y_alg1,
    build_y_alg2,
    build_y_alg3,
    build_y_trivial,
    lift_solution,
    sample_solution,
    verify_solution,
)

H = 0.5
Q = 0.75


def test_build_trivial():
    assert np.array_equal(build_y_trivial(2, 1), np.diag([1, -1]))
    assert np.array_equal(build_y_trivial(3, 2), np.diag([1, 1, -1]))
    assert np.array_equal(build_y_trivial(4, 2), np.diag([1, 1, -1, -1]))
    with pytest.raises(DimensionError):
        build_y_trivial(3, 1)


def test_alg1_examples():
    assert np.array_equal(build_y_alg1(1, [[2.0]]), [[-H, 2], [3 / 8, H]])
    assert np.array_equal(build_y_alg1(1, [[1.0]]), [[-H, 1], [Q, H]])
    y = build_y_alg1(2, np.eye(2))
    expected = np.block([[-H * np.eye(2), np.eye(2)], [Q * np.eye(2), H * np.eye(2)]])
    assert np.array_equal(y, expected)
    assert exhaustive_identity_check(y, sign_matrix(4, 2))


def test_alg1_singular():
    with pytest.raises(SingularMatrixError):
        build_y_alg1(2, np.ones((2, 2)))


def test_alg2_examples():
    y = build_y_alg2(3, 2, np.eye(2), [[1.0]])
    assert np.array_equal(y, [[-H, 0, 1], [0, 1, 0], [Q, 0, H]])
    y = build_y_alg2(3, 2, np.eye(2), [[-2.0]])
    assert np.array_equal(y, [[-H, 0, -2], [0, 1, 0], [-3 / 8, 0, H]])
    assert exhaustive_identity_check(y, sign_matrix(3, 2))
    y = build_y_alg2(4, 3, np.eye(3), [[1.0]])
    expected = [[-H, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [Q, 0, 0, H]]
    assert np.array_equal(y, expected)
    assert exhaustive_identity_check(y, sign_matrix(4, 3))


def test_alg2_inadmissible():
    with pytest.raises(InadmissibleCaseError):
        build_y_alg2(4, 2, np.eye(2), np.eye(2))


def test_alg3_examples():
    ones = np.eye(2)
    y = build_y_alg3(4, 2, 1, ones, ones, [[1.0]])
    assert np.array_equal(y, [[-H, 0, 1, 0], [0, 1, 0, 0], [Q, 0, H, 0], [0, 0, 0, -1]])
    y = build_y_alg3(4, 2, 1, ones, ones, [[2.0]])
    assert np.array_equal(y, [[-H, 0, 2, 0], [0, 1, 0, 0], [3 / 8, 0, H, 0], [0, 0, 0, -1]])
    assert exhaustive_identity_check(y, sign_matrix(4, 2))
    y = build_y_alg3(5, 3, 1, np.eye(3), np.eye(2), [[1.0]])
    expected = np.zeros((5, 5))
    expected[[0, 1, 2, 3, 4], [0, 1, 2, 3, 4]] = [-H, 1, 1, H, -1]
    expected[0, 3], expected[3, 0] = 1, Q
    assert np.array_equal(y, expected)
    assert exhaustive_identity_check(y, sign_matrix(5, 3))


@pytest.mark.parametrize("n,p,r", [(4, 2, 2), (4, 2, 0), (3, 2, 1), (6, 3, 3)])
def test_alg3_inadmissible(n, p, r):
    with pytest.raises(InadmissibleCaseError):
        build_y_alg3(n, p, r, np.eye(p), np.eye(n - p), np.eye(max(r, 1)))


def test_lift_examples():
    d = sign_matrix(2, 1)
    assert np.array_equal(lift_solution(decompose_involution(d), d), d)

    a = np.diag([-1.0, -1.0, 1.0])
    dec = decompose_involution(a)
    assert dec.sign_flip
    assert np.allclose(lift_solution(dec, np.diag([1.0, 1.0, -1.0])), a, atol=1e-15)

    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    dec = decompose_involution(swap)
    x = lift_solution(dec, build_y_alg1(1, [[1.0]]))
    report = verify_solution(swap, x)
    assert report.ybe_residual <= 1e-10 and report.involution_residual <= 1e-10


def test_lift_dimension_mismatch():
    with pytest.raises(DimensionError):
        lift_solution(decompose_involution(sign_matrix(2, 1)), np.eye(3))


def test_verify_examples():
    a = random_involution(4, 2, 3)
    report = verify_solution(a, a)
    assert report.ybe_residual < 1e-15 and report.involution_residual < 1e-14
    assert report.trace_gap == 0.0
    d = sign_matrix(2, 1)
    report = verify_solution(d, [[-H, 1], [Q, H]])
    assert report.ybe_residual == 0 and report.involution_residual == 0
    assert report.max_block_identity_residual == 0
    report = verify_solution(d, [[1, 1], [0, -1]])
    assert report.involution_residual == 0
    # A X A = [[1, -1], [0, -1]], X A X = [[1, 2], [0, -1]]; scale ||A||^2 ||X|| = 2 sqrt(3)
    assert report.ybe_residual == pytest.approx(3 / (2 * 3 ** 0.5), rel=1e-15)
    assert report.ybe_residual > 0


def test_verify_shape_mismatch():
    with pytest.raises(DimensionError):
        verify_solution(np.eye(2), np.eye(3))


def test_admissible_cases():
    assert admissible_cases(2, 1) == [SolutionCase.TRIVIAL, SolutionCase.ALG1]
    assert admissible_cases(3, 2) == [SolutionCase.TRIVIAL, SolutionCase.ALG2]
    assert admissible_cases(4, 2) == [SolutionCase.TRIVIAL, SolutionCase.ALG1, SolutionCase.ALG3]
    assert admissible_cases(8, 5) == [SolutionCase.TRIVIAL, SolutionCase.ALG2, SolutionCase.ALG3]


def test_sample_solution_errors():
    dec = decompose_involution(sign_matrix(3, 2))
    with pytest.raises(InadmissibleCaseError, match="n = 2p"):
        sample_solution(dec, "alg1", 0)
    with pytest.raises(InadmissibleCaseError, match="alg3 requires"):
        sample_solution(dec, "alg3", 0)
    with pytest.raises(InadmissibleCaseError):
        sample_solution(decompose_involution(np.eye(3)), "alg1", 0)


def test_sample_solution_trivial_identity():
    params, x = sample_solution(decompose_involution(-np.eye(2)), "trivial", 0)
    assert isinstance(params, Trivial)
    assert np.array_equal(x, -np.eye(2))


def test_sample_solution_deterministic():
    dec = decompose_involution(random_involution(6, 3, 1))
    _, x1 = sample_solution(dec, "alg3", 42)
    _, x2 = sample_solution(dec, "alg3", 42)
    assert np.array_equal(x1, x2)


def test_sample_alg1_lands_in_example_family():
    from involutive_ybe.families import K, membership_2x2

    dec = decompose_involution(sign_matrix(2, 1))
    params, x = sample_solution(dec, "alg1", 5)
    assert isinstance(params, Alg1)
    point = membership_2x2(x, 1e-12)
    assert point is not None and point.family_tag == K


def test_build_y_dispatch():
    assert np.array_equal(build_y(2, 1, Trivial()), sign_matrix(2, 1))
    with pytest.raises(InadmissibleCaseError):
        build_y(3, 2, Alg1(np.eye(2)))
    with pytest.raises(TypeError):
        build_y(2, 1, object())


SHAPES = [(2, 1), (4, 2), (3, 2), (5, 3), (6, 3), (8, 5), (9, 5), (16, 8), (20, 11), (33, 17), (64, 32)]


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), shape=st.sampled_from(SHAPES), data=st.data())
def test_constructed_y_properties(seed, shape, data):
    n, p = shape
    case = data.draw(st.sampled_from(admissible_cases(n, p)))
    dec = decompose_involution(sign_matrix(n, p))
    params, y = sample_solution(dec, case, seed)
    d = sign_matrix(n, p)
    norm_y = np.linalg.norm(y)
    assert np.linalg.norm(y @ d @ y - d @ y @ d) <= 1e-8 * norm_y ** 2
    assert np.linalg.norm(y @ y - np.eye(n)) <= 1e-8 * norm_y
    y1, _, _, y4 = split_blocks(y, p)
    assert abs(np.trace(y1) + np.trace(y4) - (2 * p - n)) <= 1e-8
    assert check_block_identities(y, p).max_residual <= 1e-8


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 24), frac=st.floats(0.05, 0.95), data=st.data())
def test_lifted_solution_properties(seed, n, frac, data):
    n_plus = min(n - 1, max(1, round(frac * n)))
    a = random_involution(n, n_plus, seed)
    dec = decompose_involution(a)
    case = data.draw(st.sampled_from(admissible_cases(dec.n, dec.p)))
    _, x = sample_solution(dec, case, seed + 1)
    report = verify_solution(a, x, dec=dec)
    assert report.passes(1e-8)
    assert report.trace_gap <= 1e-8 * max(1.0, np.linalg.norm(a))
    assert report.max_block_identity_residual <= 1e-8


def test_alg3_explicit_r():
    dec = decompose_involution(sign_matrix(8, 5))
    for r in (1, 2):
        params, _ = sample_solution(dec, "alg3", 0, r=r)
        assert isinstance(params, Alg3) and params.r == r
    with pytest.raises(InadmissibleCaseError):
        sample_solution(dec, "alg3", 0, r=3)


def test_random_parameters_are_well_conditioned():
    from involutive_ybe.linalg import lu_pivots

    dec = decompose_involution(sign_matrix(8, 5))
    params, _ = sample_solution(dec, "alg2", 3)
    assert params.p1.shape == (5, 5) and params.b2.shape == (3, 3)
    for m in (params.p1, params.b2):
        piv = lu_pivots(m)
        assert piv.min() > 1e-3 * max(1.0, piv.max())
