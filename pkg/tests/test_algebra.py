import pytest

from brauertilt.algebra import (
    build_tree_algebra,
    idempotent,
    socle_class,
    star_algebra,
)
from brauertilt.trees import BrauerTree


def walk_dim_oracle(tree, edge):
    """Independent projective dimension count: both windings at the edge,
    overlapping in the top and the socle."""
    v, w = tree.edges[edge]
    return tree.winding_bound(v) + tree.winding_bound(w)


def test_one_edge_star_truncated_polynomial():
    A = star_algebra(1, 3)
    assert A.dim == 4
    kinds = sorted(pc.kind for pc in A.basis)
    assert kinds == ["e", "p", "p", "z"]
    a = A.star_path(1, 1)
    assert A.compose(a, a) == A.star_path(1, 2)
    assert A.compose(A.star_path(1, 2), a) == socle_class(1)


def test_two_edge_line_equals_star21():
    line = BrauerTree(range(3), {1: (0, 1), 2: (1, 2)}, {0: (1,), 1: (1, 2), 2: (2,)}, 1, 1)
    A = build_tree_algebra(line)
    assert A.dim == 6
    assert A.cartan_matrix() == [[2, 1], [1, 2]]
    assert A.cartan_matrix() == star_algebra(2, 1).cartan_matrix()


def test_star_cartan_and_dims():
    A = star_algebra(3, 1)
    assert A.cartan_matrix() == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    A = star_algebra(2, 2)
    assert len(A.hom_basis(1, 2)) == 2
    A = star_algebra(4, 1)
    assert all(A.dim_projective(i) == 5 for i in A.edges)
    assert A.dim == 20
    assert star_algebra(1, 2).cartan_matrix() == [[3]]


def test_column_sums_match_walk_oracle():
    for tree in [BrauerTree.star(3, 2), BrauerTree.star(5, 1)]:
        A = build_tree_algebra(tree)
        for e in A.edges:
            assert A.dim_projective(e) == walk_dim_oracle(tree, e)


def test_socle_annihilation():
    A = star_algebra(3, 2)
    for i in A.edges:
        z = socle_class(i)
        assert A.compose(idempotent(i), z) == z
        assert A.compose(z, z) is None
        for arrow in A.arrows:
            if arrow.start == i:
                assert A.compose(z, arrow) is None


def test_compose_examples_star21():
    A = star_algebra(2, 1)
    a1, a2 = A.star_path(1, 1), A.star_path(2, 1)
    assert A.compose(idempotent(1), a1) == a1
    assert A.compose(a1, a2) == socle_class(1)
    assert A.compose(socle_class(1), a1) is None
    # winding past the socle dies
    assert A.compose(a1, socle_class(2)) is None


def test_compose_rejects_foreign_classes():
    A = star_algebra(2, 1)
    B = star_algebra(3, 1)
    foreign = B.star_path(1, 2)
    with pytest.raises(ValueError):
        A.compose(foreign, idempotent(1))


def test_hom_basis_contains_identity():
    A = star_algebra(4, 1)
    for i in A.edges:
        basis = A.hom_basis(i, i)
        assert idempotent(i) in basis
        assert len(basis) == 2
    assert len(A.hom_basis(1, 3)) == 1


def test_cartan_symmetric_and_prime_free():
    trees = [BrauerTree.star(4, 2)]
    trees.append(
        BrauerTree(range(4), {0: (0, 1), 1: (1, 2), 2: (1, 3)},
                   {0: (0,), 1: (0, 1, 2), 2: (1,), 3: (2,)}, 1, 3)
    )
    for tree in trees:
        carts = [build_tree_algebra(tree, p).cartan_matrix() for p in (2, 3, 32003)]
        assert carts[0] == carts[1] == carts[2]
        c = carts[0]
        n = len(c)
        assert all(c[i][j] == c[j][i] for i in range(n) for j in range(n))
        assert all(c[i][i] > 0 for i in range(n))


def test_parameter_validation():
    with pytest.raises(ValueError):
        star_algebra(0, 1)
    with pytest.raises(ValueError):
        star_algebra(2, 0)
