from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given

from jumploci.exactlin import (
    field_rank,
    hermite_form,
    in_integer_row_lattice,
    integer_kernel,
    matmul,
    rat_kernel,
    rat_rank,
    rref,
    smith_form,
    transpose,
)
from jumploci.simplicial import boundary_matrix, rp2_six_vertex
from strategies import SEEDED, int_matrices, rat_matrices


def test_rat_rank_examples():
    assert rat_rank([[1, 0], [0, 1]]) == 2
    assert rat_rank([[1, 2], [2, 4]]) == 1
    assert rat_rank([[1, Fraction(1, 2)], [Fraction(1, 3), Fraction(1, 6)]]) == 1
    assert rat_rank([]) == 0


def test_rat_kernel_examples():
    assert rat_kernel([[1, 0], [0, 1]]) == [[], []]
    K = rat_kernel([[1, 1]])
    assert [row[0] for row in K] == [-1, 1] or [row[0] for row in K] == [1, -1]
    M = [[1, 2, 3]]
    K = rat_kernel(M)
    assert len(K[0]) == 2
    assert all(x == 0 for row in matmul(M, K) for x in row)


def test_field_rank_examples():
    assert field_rank([[2]], 2) == 0
    assert field_rank([[2]], 3) == 1
    assert field_rank([[1, 1], [1, 1]], 5) == 1
    assert field_rank([[Fraction(1, 2), 1]], 3) == 1


def test_field_rank_rejects_composite():
    with pytest.raises(ValueError):
        field_rank([[1]], 4)


def test_smith_form_examples():
    assert smith_form([[2]]).diag == (2,)
    assert smith_form([[1, 0], [0, 0]]).diag == (1,)
    assert smith_form([[0, 0], [0, 0]]).diag == ()
    assert smith_form([[2, 4], [6, 8]]).diag == (2, 4)


def test_smith_form_rp2_boundary():
    d2 = boundary_matrix(rp2_six_vertex(), 2)
    snf = smith_form(d2)
    assert snf.torsion() == (2,)
    assert snf.rank == 10
    assert field_rank(d2, 2) == 9


def test_hermite_form_examples():
    H, U = hermite_form([[1, 0], [0, 1]])
    assert H == [[1, 0], [0, 1]]
    H, U = hermite_form([[2, 4], [1, 3]])
    assert H == [[1, 1], [0, 2]]
    assert matmul(U, [[2, 4], [1, 3]]) == H
    H, _ = hermite_form([[0, 0], [0, 0]])
    assert H == [[0, 0], [0, 0]]


def test_integer_kernel_is_saturated():
    # kernel of (2, 4) over Z is spanned by (2, -1), not (4, -2)
    K = integer_kernel([[2, 4]])
    assert len(K) == 1
    assert abs(K[0][0]) == 2 and abs(K[0][1]) == 1


def test_row_lattice_membership():
    H, _ = hermite_form([[2, 0], [0, 3]])
    assert in_integer_row_lattice([4, 3], H)
    assert not in_integer_row_lattice([1, 0], H)
    assert not in_integer_row_lattice([Fraction(1, 2), 0], H)


def _det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * _det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(len(M)))


def _minor_gcd(M, k):
    g = 0
    for rows in combinations(range(len(M)), k):
        for cols in combinations(range(len(M[0])), k):
            g = gcd(g, _det([[M[i][j] for j in cols] for i in rows]))
    return g


@SEEDED
@given(rat_matrices())
def test_rank_duality(M):
    assert rat_rank(M) == rat_rank(transpose(M))


@SEEDED
@given(rat_matrices())
def test_kernel_dimension(M):
    K = rat_kernel(M)
    ncols = len(M[0])
    k = len(K[0]) if K else 0
    assert k + rat_rank(M) == ncols
    if k:
        assert all(x == 0 for row in matmul(M, K) for x in row)


@SEEDED
@given(int_matrices())
def test_snf_divisibility_and_minors(M):
    snf = smith_form(M)
    d = snf.diag
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    # left * M * right is diagonal
    D = matmul(matmul([list(r) for r in snf.left], M), [list(r) for r in snf.right])
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (d[i] if i == j and i < len(d) else 0)
    # product of invariant factors = gcd of maximal nonzero minors
    if d:
        prod = 1
        for x in d:
            prod *= x
        assert prod == _minor_gcd(M, len(d))


@SEEDED
@given(int_matrices())
def test_hermite_conventions(M):
    H, U = hermite_form(M)
    assert matmul(U, M) == H
    assert abs(_det(U)) == 1
    last = -1
    for i, row in enumerate(H):
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            assert all(not any(r) for r in H[i:])
            break
        assert lead > last and row[lead] > 0
        for k in range(i):
            assert 0 <= H[k][lead] < row[lead]
        last = lead


@SEEDED
@given(int_matrices())
def test_field_rank_matches_rational_rank(M):
    d = smith_form(M).diag
    for p in (2, 3, 5, 7, 11, 13):
        if all(x % p for x in d):
            assert field_rank(M, p) == rat_rank(M)


def test_rref_pivots():
    R, piv = rref([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert R[1] == [0, 1, 2]
