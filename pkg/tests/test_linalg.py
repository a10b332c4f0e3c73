import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taylorinterp.errors import DimensionMismatch, NonFiniteInput, SingularMatrix
from taylorinterp.linalg import residual_norm, solve_dense


def test_identity():
    np.testing.assert_array_equal(solve_dense(np.eye(3), [1, 2, 3]), [1, 2, 3])


def test_two_by_two():
    x = solve_dense([[2, 1], [1, 3]], [5, 10])
    # substitution: 2*1 + 1*3 = 5, 1*1 + 3*3 = 10
    np.testing.assert_allclose(x, [1, 3], rtol=1e-14)


def test_rank_deficient_is_singular():
    with pytest.raises(SingularMatrix):
        solve_dense([[1, 2], [2, 4]], [1, 2])


def test_zero_matrix_is_singular():
    with pytest.raises(SingularMatrix):
        solve_dense(np.zeros((2, 2)), [0, 0])


def test_needs_pivoting():
    # zero leading entry: fails without a row swap
    x = solve_dense([[0, 1], [1, 0]], [2, 3])
    np.testing.assert_array_equal(x, [3, 2])


def test_inputs_not_modified():
    a = np.array([[4.0, 1.0], [2.0, 3.0]])
    b = np.array([1.0, 2.0])
    a0, b0 = a.copy(), b.copy()
    solve_dense(a, b)
    np.testing.assert_array_equal(a, a0)
    np.testing.assert_array_equal(b, b0)


@pytest.mark.parametrize(
    "a, b",
    [
        (np.ones((2, 3)), np.ones(2)),
        (np.eye(2), np.ones(3)),
        (np.ones(4), np.ones(2)),
    ],
)
def test_shape_errors(a, b):
    with pytest.raises(DimensionMismatch):
        solve_dense(a, b)


def test_non_finite():
    with pytest.raises(NonFiniteInput):
        solve_dense([[1, 0], [0, np.nan]], [1, 1])


def test_residual_norm_examples():
    assert residual_norm(np.eye(3), [1, 2, 3], [1, 2, 3]) == 0
    assert residual_norm([[2]], [3], [6]) == 0
    assert residual_norm([[2]], [3], [7]) == 1


def test_residual_norm_shape_error():
    with pytest.raises(DimensionMismatch):
        residual_norm(np.eye(2), [1, 2, 3], [1, 2])


def _diag_dominant(seed, n):
    rng = np.random.default_rng(seed)
    a = rng.uniform(-1, 1, (n, n)) + n * np.eye(n)
    return rng, a


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 15))
def test_random_well_conditioned_residual(seed, n):
    rng, a = _diag_dominant(seed, n)
    b = rng.uniform(-1, 1, n)
    x = solve_dense(a, b)
    assert residual_norm(a, x, b) <= 1e-8 * np.max(np.abs(b))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 15))
def test_row_permutation_invariance(seed, n):
    rng, a = _diag_dominant(seed, n)
    b = rng.uniform(-1, 1, n)
    perm = rng.permutation(n)
    x1 = solve_dense(a, b)
    x2 = solve_dense(a[perm], b[perm])
    np.testing.assert_allclose(x2, x1, rtol=1e-10, atol=1e-10 * np.max(np.abs(x1)))


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 12), log_cond=st.floats(0, 6))
def test_recovers_known_solution(seed, n, log_cond):
    rng = np.random.default_rng(seed)
    q1, _ = np.linalg.qr(rng.normal(size=(n, n)))
    q2, _ = np.linalg.qr(rng.normal(size=(n, n)))
    a = q1 @ np.diag(np.logspace(0, -log_cond, n)) @ q2
    x0 = rng.uniform(-1, 1, n)
    x = solve_dense(a, a @ x0)
    assert np.max(np.abs(x - x0)) <= 1e-8 * np.max(np.abs(x0))
