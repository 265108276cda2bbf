from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_matrices, rationals
from triplesys.errors import UsageError
from triplesys.exactlin import (as_int64, as_matrix, echelon, format_rat, identity, inverse,
                                kernel_basis, matmul, normalize, rank, rat, rref, solve, zeros)


def test_rat_parses_strings_and_rejects_floats():
    assert rat("3") == 3 and type(rat("3")) is int
    assert rat("-4/6") == Fraction(-2, 3)
    assert rat(Fraction(4, 2)) == 2 and type(rat(Fraction(4, 2))) is int
    for bad in ("1/0", "1.5", "x", 0.5, True, None):
        with pytest.raises(ValueError):
            rat(bad)


def test_format_rat_lowest_terms():
    assert format_rat(Fraction(6, -4)) == "-3/2"
    assert format_rat(Fraction(8, 4)) == "2"
    assert normalize(Fraction(5, 1)) == 5


def test_rank_known_matrices():
    assert rank(zeros(3, 4)) == 0
    assert rank(identity(5)) == 5
    assert rank(as_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])) == 2
    assert rank(as_matrix([["1/2", "1/3"], ["1/4", "1/6"]])) == 1
    assert rank(zeros(0, 3)) == 0


def test_kernel_free_column_form():
    m = as_matrix([[1, 2, 0, 1], [0, 0, 1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert not np.any(matmul(m, v) != 0)
    assert basis[0][1] == 1 and basis[0][3] == 0
    assert basis[1][1] == 0 and basis[1][3] == 1


def test_inverse_and_solve():
    m = as_matrix([[2, 1], [1, 1]])
    assert not np.any(matmul(m, inverse(m)) != identity(2))
    assert solve(as_matrix([[1, 1], [1, 1]]), [1, 2]) is None
    x = solve(m, [3, 2])
    assert list(x) == [1, 1]


def test_inverse_rejects_singular():
    with pytest.raises(Exception):
        inverse(as_matrix([[1, 2], [2, 4]]))


def test_as_int64_guards_size():
    assert as_int64(np.array([1, 2], dtype=object)).dtype == np.int64
    assert as_int64(np.array([Fraction(1, 2)], dtype=object)) is None
    assert as_int64(np.array([2 ** 63], dtype=object)) is None


def test_as_matrix_shape_errors():
    with pytest.raises(UsageError):
        as_matrix([1, 2, 3])


@given(int_matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.shape[1]
    for v in kernel_basis(m):
        assert not np.any(matmul(m, v) != 0)


@given(int_matrices(max_dim=5, elements=rationals))
def test_rank_matches_echelon_and_transpose(m):
    e, pivots = echelon(m)
    assert rank(m) == len(pivots) == rank(m.T.copy())
    r, piv = rref(m)
    for k, p in enumerate(piv):
        col = [r[i, p] for i in range(r.shape[0])]
        assert col == [1 if i == k else 0 for i in range(r.shape[0])]


@given(int_matrices(rows=3, cols=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_consistent_systems(m, x):
    b = matmul(m, np.array(x, dtype=object))
    y = solve(m, b)
    assert y is not None and not np.any(matmul(m, y) != b)


@given(int_matrices(rows=12, cols=14, elements=st.integers(-40, 40)))
def test_large_rank_matches_bareiss(m):
    # the large path certifies a mod-p row selection; compare with plain elimination
    _, pivots = echelon(m)
    assert rank(m) == len(pivots)
