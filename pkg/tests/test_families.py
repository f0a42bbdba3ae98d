import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from involutive_ybe.blocks import check_block_identities
from involutive_ybe.classify import classify_solution
from involutive_ybe.families import (
    D2,
    D3,
    K,
    K2,
    K3,
    FamilyPoint,
    family_k2_3x3,
    family_k3_3x3,
    family_k_2x2,
    fit_k2_3x3,
    fit_k3_3x3,
    membership_2x2,
    membership_3x3,
)
from involutive_ybe.involution import decompose_involution, sign_matrix
from involutive_ybe.oracle import exhaustive_identity_check
from involutive_ybe.solver import Alg2, build_y_alg1, sample_solution, verify_solution

EPS = np.finfo(float).eps
D_2 = sign_matrix(2, 1)
D_3 = sign_matrix(3, 2)

moduli = st.floats(0.1, 10)
phases = st.floats(0, 2 * np.pi)


def complex_param(mod, phase):
    return mod * np.exp(1j * phase)


def test_k_examples():
    assert np.array_equal(family_k_2x2(1), [[-0.5, 1], [0.75, 0.5]])
    y = family_k_2x2(1j)
    assert np.array_equal(y, [[-0.5, 1j], [-0.75j, 0.5]])
    assert exhaustive_identity_check(y, D_2)
    with pytest.raises(ValueError):
        family_k_2x2(0)


@settings(max_examples=100, deadline=None)
@given(mod=st.floats(1e-6, 1e6), phase=phases)
def test_k_involutive_and_matches_alg1(mod, phase):
    t = complex_param(mod, phase)
    y = family_k_2x2(t)
    # trace 0 and det -1 force Y^2 = I
    assert np.trace(y) == 0
    assert abs(np.linalg.det(y) + 1) < 1e-12
    alg1 = build_y_alg1(1, [[t]])
    assert y[0, 0] == alg1[0, 0] and y[0, 1] == alg1[0, 1] and y[1, 1] == alg1[1, 1]
    assert abs(y[1, 0] - alg1[1, 0]) <= 4 * EPS * abs(y[1, 0])


def test_k2_examples():
    y = family_k2_3x3(1, 1)
    assert np.array_equal(y, [[1, 0, 0], [-1.5, -0.5, 1], [0.75, 0.75, 0.5]])
    y = family_k2_3x3(2, 1)
    assert np.array_equal(y, [[1, 0, 0], [-3, -0.5, 1], [1.5, 0.75, 0.5]])
    assert exhaustive_identity_check(y, D_3)
    report = verify_solution(D_3, y)
    assert report.ybe_residual == 0 and report.involution_residual == 0
    with pytest.raises(ValueError):
        family_k2_3x3(1, 0)


def test_k2_with_u_zero_is_a_solution_outside_k3():
    y = family_k2_3x3(0, 2)
    assert exhaustive_identity_check(y, D_3)
    assert fit_k3_3x3(y) is None
    assert membership_3x3(y) == FamilyPoint(K2, (0j, 2 + 0j))


def test_k3_examples():
    y = family_k3_3x3(0, 0, 1)
    assert np.array_equal(y, [[-0.5, 0, 1], [0, 1, 0], [0.75, 0, 0.5]])
    y = family_k3_3x3(1, 0, 1)
    assert np.array_equal(y, [[-0.5, 1.5, 1], [0, 1, 0], [0.75, -0.75, 0.5]])
    assert exhaustive_identity_check(y, D_3)
    with pytest.raises(ValueError):
        family_k3_3x3(1, 1, 0)


def _conjugated_hat_y(p1, t):
    """Direct evaluation of diag(P1, 1) Yhat diag(P1, 1)^{-1} with the displayed Yhat."""
    w = np.eye(3, dtype=complex)
    w[:2, :2] = p1
    hat = np.array([[-0.5, 0, t], [0, 1, 0], [3 / (4 * t), 0, 0.5]])
    return w @ hat @ np.linalg.inv(w)


@settings(max_examples=60, deadline=None)
@given(a=moduli, b=moduli, c=moduli, t=moduli, pa=phases, pb=phases, pc=phases, pt=phases)
def test_k3_is_conjugate_of_hat_y(a, b, c, t, pa, pb, pc, pt):
    # P1 = [[a, b], [c, d]] with det P1 = 1; a != 0 gives K3 with t3 = a t, b2 = a b, c2 = c / a
    a, b, c, t = (complex_param(*v) for v in ((a, pa), (b, pb), (c, pc), (t, pt)))
    d = (1 + b * c) / a
    y = _conjugated_hat_y(np.array([[a, b], [c, d]]), t)
    expected = family_k3_3x3(a * b, c / a, a * t)
    assert np.linalg.norm(y - expected) <= 1e-9 * np.linalg.norm(expected)


@settings(max_examples=60, deadline=None)
@given(b=moduli, d=moduli, t=moduli, pb=phases, pd=phases, pt=phases)
def test_k2_is_conjugate_of_hat_y(b, d, t, pb, pd, pt):
    # a = 0 forces -b c = 1; then u = c d and t2 = c t
    b, d, t = (complex_param(*v) for v in ((b, pb), (d, pd), (t, pt)))
    c = -1 / b
    y = _conjugated_hat_y(np.array([[0, b], [c, d]]), t)
    expected = family_k2_3x3(c * d, c * t)
    assert np.linalg.norm(y - expected) <= 1e-9 * np.linalg.norm(expected)


@settings(max_examples=60, deadline=None)
@given(u=moduli, t2=moduli, pu=phases, pt=phases, b2=moduli, c2=moduli, t3=moduli, pb=phases, pc=phases, p3=phases)
def test_family_block_identities(u, t2, pu, pt, b2, c2, t3, pb, pc, p3):
    y = family_k2_3x3(complex_param(u, pu), complex_param(t2, pt))
    assert check_block_identities(y, 2).max_residual <= 1e-12
    z = family_k3_3x3(complex_param(b2, pb), complex_param(c2, pc), complex_param(t3, p3))
    assert check_block_identities(z, 2).max_residual <= 1e-12
    assert abs(np.trace(z) - 1) <= 1e-12 * np.linalg.norm(z)


def test_membership_2x2_examples():
    assert membership_2x2(D_2) == FamilyPoint(D2)
    point = membership_2x2([[-0.5, 5], [3 / 20, 0.5]])
    assert point.family_tag == K and point.params == (5 + 0j,)
    assert membership_2x2(np.eye(2)) is None
    with pytest.raises(ValueError):
        membership_2x2(np.eye(3))


@settings(max_examples=100, deadline=None)
@given(entries=st.lists(st.floats(-3, 3), min_size=4, max_size=4))
def test_membership_2x2_never_ambiguous(entries):
    y = np.array(entries).reshape(2, 2)
    point = membership_2x2(y)
    if point is not None:
        assert point.family_tag in (D2, K)
        if point.family_tag == K:
            assert np.linalg.norm(y - D_2) > 1e-8


def test_membership_3x3():
    assert membership_3x3(D_3) == FamilyPoint(D3)
    assert membership_3x3(family_k3_3x3(2, -1, 3j)).family_tag == K3
    assert membership_3x3(np.eye(3)) is None
    assert fit_k2_3x3(family_k3_3x3(2, -1, 3j)) is None


def test_family_point_validation():
    with pytest.raises(ValueError):
        FamilyPoint(K, ())
    with pytest.raises(ValueError):
        FamilyPoint("K9", ())
    assert np.array_equal(FamilyPoint(K, (2,)).matrix(), family_k_2x2(2))


def test_classified_alg2_samples_fall_in_exactly_one_family():
    dec = decompose_involution(D_3)
    for seed in range(200):
        _, y = sample_solution(dec, "alg2", seed)
        params = classify_solution(dec, y)
        assert isinstance(params, Alg2)
        hits = [f for f in (fit_k2_3x3(y, 1e-6), fit_k3_3x3(y, 1e-6)) if f is not None]
        assert len(hits) == 1
        assert np.linalg.norm(hits[0].matrix() - y) <= 1e-6 * np.linalg.norm(y)
