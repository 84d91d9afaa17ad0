from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from src.components.int_matrix import (
    IntMatrix,
    hermite_normal_form,
    integer_kernel,
    lattice_quotient,
    row_reduce_upper,
    smith_normal_form,
    solve_integer,
    triangular_inverse,
)
from src.exception import InvariantViolation, LatticeMembershipError


def _oracle_factors(rows):
    return [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ) if d != 0]


def _determinantal_factors(rows):
    # d_1 * ... * d_k = gcd of the k x k minors
    m = Matrix(rows)
    products = [1]
    for k in range(1, min(m.shape) + 1):
        g = 0
        for r in combinations(range(m.rows), k):
            for c in combinations(range(m.cols), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        products.append(g)
    return [products[k] // products[k - 1] for k in range(1, len(products))]


def test_int_matrix_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    b = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]
    assert a.transpose().to_lists() == [[1, 3], [2, 4]]
    assert a.shape == (2, 2)
    assert a[1, 0] == 3
    assert a.rank() == 2
    assert IntMatrix.from_rows([[1, 2], [2, 4]]).rank() == 1
    assert IntMatrix.identity(3).is_lower_triangular()
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_triangular_inverse_of_marks():
    marks = [[4, 0, 0], [2, 2, 0], [1, 1, 1]]
    inv = triangular_inverse(marks)
    for i in range(3):
        for j in range(3):
            value = sum(Fraction(marks[i][k]) * inv[k][j] for k in range(3))
            assert value == (1 if i == j else 0)
    with pytest.raises(InvariantViolation):
        triangular_inverse([[1, 1], [0, 1]])
    with pytest.raises(InvariantViolation):
        triangular_inverse([[0, 0], [1, 1]])


def test_row_reduce_upper_small_cases():
    H, U = row_reduce_upper([[1, 1], [1, 3]])
    assert H.to_lists() == [[1, 1], [0, 2]]
    assert U.to_lists() == [[1, 0], [-1, 1]]

    M = [[1, 1, 1, 1, 1, 1, 1],
         [1, 3, 1, 3, 1, 3, 3],
         [1, 1, 2, 2, 2, 4, 4],
         [1, 3, 2, 4, 2, 6, 6],
         [1, 1, 2, 2, 4, 4, 8],
         [1, 3, 4, 6, 4, 12, 12],
         [1, 3, 4, 6, 8, 12, 24]]
    H, U = row_reduce_upper(M)
    assert H.nrows == 5
    assert H.rows[-1] == (0, 0, 0, 0, 0, 0, 4)
    assert (U @ IntMatrix.from_rows(M)).to_lists() == H.to_lists()


def test_row_reduce_upper_rejects_fractional_multiplier():
    with pytest.raises(InvariantViolation):
        row_reduce_upper([[2, 1], [1, 1]])


def test_smith_normal_form_known_example():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    snf = smith_normal_form(A)
    assert snf.invariant_factors == (2, 6, 12)
    D = (snf.left @ IntMatrix.from_rows(A)) @ snf.right
    assert D.to_lists() == [[2, 0, 0], [0, 6, 0], [0, 0, 12]]
    assert (snf.right @ snf.right_inverse).to_lists() == IntMatrix.identity(3).to_lists()


def test_smith_normal_form_matches_sympy_on_random_matrices():
    rng = np.random.default_rng(7)
    for shape in [(4, 4), (3, 5), (5, 3), (2, 6)]:
        for _ in range(15):
            rows = rng.integers(-6, 7, size=shape).tolist()
            snf = smith_normal_form(rows)
            assert list(snf.invariant_factors) == _determinantal_factors(rows)
            if shape[0] == shape[1]:
                assert list(snf.invariant_factors) == _oracle_factors(rows)
            for a, b in zip(snf.invariant_factors, snf.invariant_factors[1:]):
                assert b % a == 0
            D = ((snf.left @ IntMatrix.from_rows(rows)) @ snf.right).to_lists()
            for i, row in enumerate(D):
                for j, x in enumerate(row):
                    expected = snf.invariant_factors[i] if i == j and i < len(snf.invariant_factors) else 0
                    assert x == expected


def test_lattice_quotient_cases():
    q = lattice_quotient(1, [[2]])
    assert (q.free_rank, q.invariant_factors) == (0, (2,))
    assert q.generators == ((2, (1,)),)
    assert q.describe() == "Z/2"

    # Z[a, b] / Z[a + b] is free of rank one
    q = lattice_quotient(2, [[1, 1]])
    assert (q.free_rank, q.invariant_factors) == (1, ())

    q = lattice_quotient(3, [])
    assert q.free_rank == 3 and not q.is_trivial

    q = lattice_quotient(2, [[1, 0], [0, 1]])
    assert q.is_trivial
    assert q.describe() == "0"

    q = lattice_quotient(3, [[2, 2, 0], [0, 0, 2]])
    assert (q.free_rank, q.invariant_factors) == (1, (2, 2))
    assert [order for order, _ in q.generators] == [2, 2, 0]


def test_hermite_normal_form():
    rows = [[2, 4, 6], [1, 3, 5], [3, 7, 11]]
    H, U = hermite_normal_form(rows)
    assert (U @ IntMatrix.from_rows(rows)).to_lists() == H.to_lists()
    assert H.rows[0] == (1, 1, 1)
    assert H.rows[1] == (0, 2, 4)
    assert H.rows[2] == (0, 0, 0)
    assert abs(Matrix(U.to_lists()).det()) == 1


def test_integer_kernel():
    K = integer_kernel(IntMatrix.from_rows([[1, 1, 1]]))
    assert K.nrows == 2
    for row in K.rows:
        assert sum(row) == 0
    assert integer_kernel(IntMatrix.from_rows([[1, 0], [0, 1]])).nrows == 0
    K = integer_kernel(IntMatrix.from_rows([[2, 4]]))
    assert K.rows == ((2, -1),)


def test_solve_integer():
    B = [[1, 1, 0], [0, 2, 0], [0, 0, 1]]
    x = solve_integer(B, [1, 5, 3])
    assert x == (1, 2, 3)
    with pytest.raises(LatticeMembershipError):
        solve_integer(B, [0, 1, 0])
    with pytest.raises(LatticeMembershipError):
        solve_integer([], [1])
    assert solve_integer([], []) == ()
