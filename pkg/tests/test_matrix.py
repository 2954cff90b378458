"""Matrix algebra: products, determinants, adjugate inverses, Gram shapes,
orthogonality, and the exhaustive full-rank scan."""

import random

import pytest

from ringcodes import (
    ANTI_DIAGONAL,
    BudgetExceededError,
    DIAGONAL,
    Matrix,
    NotInvertibleError,
    ShapeError,
)


def rand_matrix(ring, rng, rows, cols):
    elems = list(ring.elements())
    return Matrix(ring, [[rng.choice(elems) for _ in range(cols)] for _ in range(rows)])


def test_identity_multiplication(z20):
    a = Matrix(z20, [[1, 2, 3], [4, 5, 6]])
    assert Matrix.identity(z20, 2) @ a == a


def test_gram_golden(z20):
    a = Matrix(z20, [[1, 2], [0, 0]])
    assert a.gram() == Matrix(z20, [[5, 0], [0, 0]])
    b = Matrix(z20, [[0, 2, 0, 4], [0, 4, 2, 0]])
    assert b.gram() == Matrix(z20, [[0, 8], [8, 0]])


def test_transpose_and_determinant_properties(z12, z25):
    rng = random.Random(71)
    for ring in (z12, z25):
        for _ in range(25):
            a = rand_matrix(ring, rng, 3, 3)
            b = rand_matrix(ring, rng, 3, 3)
            assert (a @ b).transpose() == b.transpose() @ a.transpose()
            assert (a @ b).determinant() == a.determinant() * b.determinant()


def test_determinant_golden(z20, z25):
    assert Matrix.identity(z25, 4).determinant() == z25.one
    assert Matrix(z25, [[1, 7], [7, 1]]).determinant() == z25.element(2)
    assert Matrix(z20, [[1, 2], [0, 0]]).determinant() == z20.zero


def test_determinant_needs_square(z20):
    with pytest.raises(ShapeError):
        Matrix(z20, [[1, 2, 3], [4, 5, 6]]).determinant()


def test_is_nonsingular(z20, z25):
    assert Matrix(z25, [[1, 7], [7, 1]]).is_nonsingular()
    assert not Matrix(z20, [[1, 2], [0, 0]]).is_nonsingular()
    assert Matrix.identity(z20, 3).is_nonsingular()


def test_adjugate_inverse(z25):
    identity = Matrix.identity(z25, 3)
    assert identity.adjugate_inverse() == identity
    a = Matrix(z25, [[1, 7], [7, 1]])
    inv = a.adjugate_inverse()
    assert a @ inv == Matrix.identity(z25, 2)
    assert inv @ a == Matrix.identity(z25, 2)


def test_inverse_transpose_rows_for_unit_antidiagonal_gram(z25):
    # With A*A^t = adiag(14,14), row i of (A^-1)^t is 14^-1 times
    # row (s-i+1) of A.
    a = Matrix(z25, [[1, 7], [7, 1]])
    inv_t = a.adjugate_inverse().transpose()
    lam_inv = z25.element(14).invert()
    for i in range(2):
        assert inv_t.row(i) == tuple(lam_inv * e for e in a.row(1 - i))


def test_singular_inverse_rejected(z20):
    with pytest.raises(NotInvertibleError):
        Matrix(z20, [[1, 2], [0, 0]]).adjugate_inverse()


def test_classify_gram_golden(z20, z25):
    shape = Matrix(z20, [[1, 2], [0, 0]]).classify_gram()
    assert shape.tag == DIAGONAL
    assert [e.raw for e in shape.lambdas] == [5, 0]
    shape = Matrix(z20, [[0, 2, 0, 4], [0, 4, 2, 0]]).classify_gram()
    assert shape.tag == ANTI_DIAGONAL
    assert [e.raw for e in shape.lambdas] == [8, 8]
    shape = Matrix(z25, [[1, 7], [7, 1]]).classify_gram()
    assert shape.tag == ANTI_DIAGONAL
    assert [e.raw for e in shape.lambdas] == [14, 14]


def test_classify_gram_tie_breaks(z4):
    # 1x1 Grams and zero Grams qualify both ways; diagonal wins.
    assert Matrix(z4, [[1, 2]]).classify_gram().tag == DIAGONAL
    shape = Matrix(z4, [[0, 2], [2, 0]]).classify_gram()
    assert shape.tag == DIAGONAL
    assert [e.raw for e in shape.lambdas] == [0, 0]


def test_classify_gram_other(z25):
    assert Matrix(z25, [[1, 0], [1, 1]]).classify_gram().tag == "other"


def test_classify_gram_reconstructs(z12, z25):
    rng = random.Random(303)
    for ring in (z12, z25):
        zero, s = ring.zero, 3
        for _ in range(40):
            a = rand_matrix(ring, rng, s, 4)
            shape = a.classify_gram()
            g = a.gram()
            if shape.tag == DIAGONAL:
                rebuilt = Matrix(
                    ring,
                    [
                        [shape.lambdas[i] if i == j else zero for j in range(s)]
                        for i in range(s)
                    ],
                )
                assert rebuilt == g
            elif shape.tag == ANTI_DIAGONAL:
                rebuilt = Matrix(
                    ring,
                    [
                        [shape.lambdas[i] if j == s - 1 - i else zero for j in range(s)]
                        for i in range(s)
                    ],
                )
                assert rebuilt == g


def test_unit_gram_implies_nonsingular(z25, z13):
    for ring, rows in (
        (z25, [[1, 7], [7, 1]]),
        (z13, [[1, 5], [5, 1]]),
        (z13, [[2, 0], [0, 3]]),
    ):
        a = Matrix(ring, rows)
        shape = a.classify_gram()
        assert shape.tag in (DIAGONAL, ANTI_DIAGONAL)
        assert all(lam.is_unit() for lam in shape.lambdas)
        assert a.is_nonsingular()


def test_is_orthogonal(z5, z25):
    assert Matrix.identity(z25, 3).is_orthogonal()
    assert not Matrix(z25, [[1, 7], [7, 1]]).is_orthogonal()
    assert not Matrix(z5, [[2, 0], [0, 3]]).is_orthogonal()
    assert Matrix(z5, [[0, 4], [1, 0]]).is_orthogonal()  # signed permutation


def test_orthogonal_iff_identity_gram(z4, z5):
    rng = random.Random(99)
    for ring in (z4, z5):
        for _ in range(60):
            a = rand_matrix(ring, rng, 2, 2)
            shape = a.classify_gram()
            expected = shape.tag == DIAGONAL and all(
                lam == ring.one for lam in shape.lambdas
            )
            assert a.is_orthogonal() == expected


def test_has_full_rank(z20):
    a = Matrix(z20, [[1, 2], [0, 0]])
    # Witness: (0,1) * A = 0.
    assert all((0 * x + 1 * y) % 20 == 0 for x, y in zip(*a._raw_rows))
    assert not a.has_full_rank()
    assert Matrix.identity(z20, 3).has_full_rank()
    b = Matrix(z20, [[0, 2, 0, 4], [0, 4, 2, 0]])
    # Witness: (10,0) * B = 0.
    assert all((10 * x) % 20 == 0 for x in b._raw_rows[0])
    assert not b.has_full_rank()


def test_has_full_rank_extension_ring(gr92):
    assert Matrix.identity(gr92, 2).has_full_rank()
    three = gr92.from_int(3)
    assert not Matrix(gr92, [[three, three]]).has_full_rank()


def test_full_rank_budget(z25):
    with pytest.raises(BudgetExceededError):
        Matrix.identity(z25, 5).has_full_rank(budget=1000)


def test_ragged_rows_rejected(z20):
    with pytest.raises(ShapeError):
        Matrix(z20, [[1, 2], [3]])
    with pytest.raises(ShapeError):
        Matrix(z20, [])
