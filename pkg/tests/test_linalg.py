import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfcoh.errors import BudgetExceeded, ShapeMismatch
from hopfcoh.linalg import (
    BasedSpace,
    Element,
    LinearMap,
    chain,
    check_budget,
    coordinate_block,
    flat_index,
    identity,
    inverse,
    multi_index,
    nullspace,
    permute_factors,
    rank,
    solve,
    tensor,
)

P = 5


def matrices(rows, cols):
    return st.lists(st.integers(0, P - 1), min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: np.array(xs, dtype=np.int64).reshape(rows, cols)
    )


@given(matrices(3, 4))
def test_nullspace_is_annihilated_and_complete(A):
    N = nullspace(A, P)
    assert not ((A @ N.T) % P).any()
    assert len(N) + rank(A, P) == A.shape[1]


@given(matrices(4, 4))
def test_inverse_or_singular(A):
    inv = inverse(A, P)
    if inv is None:
        assert rank(A, P) < 4
    else:
        assert np.array_equal((A @ inv) % P, np.eye(4, dtype=np.int64))


@given(matrices(3, 3), st.lists(st.integers(0, P - 1), min_size=3, max_size=3))
def test_solve_returns_a_solution(A, x):
    b = (A @ np.array(x)) % P
    y = solve(A, b, P)
    assert y is not None and np.array_equal((A @ y) % P, b)


def test_flat_index_leftmost_most_significant():
    U, V = BasedSpace.from_labels("U", "ab"), BasedSpace.from_labels("V", "xyz")
    assert flat_index((U, V), (1, 2)) == 5
    assert multi_index((U, V), 4) == (1, 1)


def test_coordinate_block_is_lexicographic():
    rows = coordinate_block(3, 2, 0, 9)
    assert [tuple(r) for r in rows] == sorted(tuple(r) for r in rows)
    assert tuple(rows[5]) == (1, 2)


def test_tensor_and_composition():
    U = BasedSpace.from_labels("U", "ab")
    f = LinearMap.from_dense((U,), (U,), P, [[1, 2], [0, 3]])
    g = LinearMap.from_dense((U,), (U,), P, [[2, 0], [1, 1]])
    assert tensor(f, g) @ tensor(g, f) == tensor(f @ g, g @ f)
    assert chain(f, g, identity(U, P)) == f @ g


def test_permute_factors_is_a_flip():
    U, V = BasedSpace.from_labels("U", "ab"), BasedSpace.from_labels("V", "xyz")
    flip = permute_factors((U, V), [1, 0], P)
    assert flip.cod == (V, U)
    x = Element.from_vec((U, V), np.eye(6, dtype=np.int64)[1], P)  # a x y
    assert flip(x).support() == {(1, 0): 1}


def test_composition_shape_mismatch():
    U, V = BasedSpace.from_labels("U", "ab"), BasedSpace.from_labels("V", "xyz")
    with pytest.raises(ShapeMismatch):
        identity(U, P) @ identity(V, P)


def test_budget():
    check_budget(10, 10)
    with pytest.raises(BudgetExceeded):
        check_budget(11, 10)


@settings(max_examples=30)
@given(matrices(2, 2))
def test_map_serialization_roundtrip(A):
    U = BasedSpace.from_labels("U", "ab")
    f = LinearMap.from_dense((U,), (U,), P, A)
    assert LinearMap.from_dict(f.to_dict(), P) == f
