import numpy as np

from brauertilt import linalg


def test_rref_rank():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert linalg.rank(m, 5) == 2
    red, piv = linalg.rref(m, 5)
    assert piv == [0, 1]
    assert red[0][0] == 1 and red[1][1] == 1


def test_nullspace_annihilates():
    m = np.array([[1, 2, 3, 4], [0, 1, 1, 0], [1, 3, 4, 4]], dtype=np.int64)
    for p in (2, 3, 32003):
        ns = linalg.nullspace(m, p)
        assert ns.shape[0] == 4 - linalg.rank(m, p)
        assert not linalg.matmul(m, ns.T, p).any()


def test_solve_consistent_and_inconsistent():
    a = [[1, 1], [1, 2]]
    x = linalg.solve(a, [3, 5], 7)
    assert x is not None
    assert list(linalg.matmul(a, np.array(x)[:, None], 7)[:, 0]) == [3, 5]
    bad = linalg.solve([[1, 1], [2, 2]], [1, 3], 7)
    assert bad is None


def test_solve_matrix_rhs_identity():
    a = np.array([[2, 1], [1, 1]], dtype=np.int64)
    inv = linalg.solve(a, linalg.eye(2), 11)
    assert np.array_equal(linalg.matmul(a, inv, 11), linalg.eye(2))


def test_express():
    basis = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.int64)
    coords = linalg.express(basis, np.array([[1, 1, 2], [2, 0, 2]]), 5)
    assert coords is not None
    assert np.array_equal(linalg.matmul(coords, basis, 5) % 5, np.array([[1, 1, 2], [2, 0, 2]]))
    assert linalg.express(basis, np.array([[1, 0, 0]]), 5) is None


def test_empty_shapes():
    assert linalg.rank(linalg.zeros(0, 3), 7) == 0
    assert linalg.nullspace(linalg.zeros(0, 3), 7).shape == (3, 3)
    assert linalg.nullspace(linalg.zeros(3, 0), 7).shape == (0, 0)


def test_is_invertible():
    assert linalg.is_invertible([[1, 1], [0, 1]], 2)
    assert not linalg.is_invertible([[1, 1], [1, 1]], 2)
