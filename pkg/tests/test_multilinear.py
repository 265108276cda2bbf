import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from triplesys.errors import UsageError
from triplesys.multilinear import (ElementaryBasis, MultiMap, Space, contract, inversions,
                                   map_space_dim, shuffles)


def test_space_labels_unique():
    with pytest.raises(Exception):
        Space(("a", "a"))
    s = Space(("x", "y"))
    assert s.index("y") == 1 and s.dim == 2
    assert Space.tensor_square(s).dim == 4


def test_from_table_and_eval():
    g = Space.standard(2)
    m = MultiMap.from_table((g, g), g, {(0, 1): {"e1": 3}})
    assert list(m.value(0, 1)) == [0, 3]
    assert list(m.eval([1, 0], [0, 2])) == [0, 6]
    assert m.table == {(0, 1): (0, 3)}


def test_arithmetic_and_equality():
    g = Space.standard(2)
    a = MultiMap.from_table((g,), g, {(0,): {"e0": 1}})
    b = MultiMap.from_table((g,), g, {(1,): {"e1": 2}})
    assert (a + b) - b == a
    assert -(a * 2) + a * 2 == MultiMap.zero((g,), g)
    with pytest.raises(UsageError):
        a + MultiMap.zero((g, g), g)


@given(st.integers(0, 4), st.integers(0, 4))
def test_shuffle_count_and_signs(i, j):
    sh = shuffles(i, j)
    assert len(sh) == math.comb(i + j, i)
    for s in sh:
        assert list(s.perm[:i]) == sorted(s.perm[:i]) and list(s.perm[i:]) == sorted(s.perm[i:])
        assert s.sign == (-1) ** inversions(s.perm)


def test_shuffle_signs_sum():
    # sum of signs of (1,1)-shuffles is 0, of (2,1)-shuffles is 1
    assert sum(s.sign for s in shuffles(1, 1)) == 0
    assert sum(s.sign for s in shuffles(2, 1)) == 1


def test_elementary_basis_roundtrip():
    g = Space.standard(2)
    n, basis = map_space_dim((g, g), g)
    assert n == 8 == len(basis)
    total = sum((basis[k] * (k + 1) for k in range(n)), MultiMap.zero((g, g), g))
    assert list(basis.coordinates(total)) == list(range(1, 9))
    assert isinstance(basis, ElementaryBasis)


def test_contract_is_exact():
    from fractions import Fraction
    a = np.array([[Fraction(1, 3)]], dtype=object)
    out = contract("ij,jk->ik", a, a)
    assert out[0, 0] == Fraction(1, 9)
