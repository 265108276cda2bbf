import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from triplesys import corpus as K
from triplesys.algebras import Rep, adjoint_rep
from triplesys.cohomology import (coboundary, coboundary_matrices, coboundary_matrix, cochain_basis,
                                  cohomology_dims, cohomology_table, delta_squared, is_cocycle,
                                  oracle_delta_vs_bracket, table_from_matrices)
from triplesys.controlling import is_lts_cochain
from triplesys.errors import PreconditionError, UsageError
from triplesys.exactlin import identity, is_zero
from triplesys.multilinear import MultiMap

SMALL = {k: v for k, v in K.rep_corpus().items() if v.base.dim <= 2}


def test_cochain_dimensions():
    sl2 = K.sl2_lts()
    ad = adjoint_rep(sl2)
    assert [len(cochain_basis(sl2, ad, n)) for n in (1, 2, 3)] == [9, 24, 216]


def test_cochain_basis_satisfies_constraints():
    a = K.zero_lts(2)
    basis = cochain_basis(a, adjoint_rep(a), 3)
    for k in range(len(basis)):
        assert is_lts_cochain(basis[k]).passed


@pytest.mark.parametrize("name", list(SMALL))
def test_delta_squared_small(name):
    rep = SMALL[name]
    for n in (1, 2):
        assert is_zero(delta_squared(rep.base, rep, n))


def test_known_dimensions():
    rc = K.rep_corpus()
    assert cohomology_dims(K.sl2_lts(), adjoint_rep(K.sl2_lts()), 2) == [3, 0]
    assert cohomology_dims(rc["nonabelian2/adjoint"].base, rc["nonabelian2/adjoint"], 3) == [2, 1, 4]
    assert cohomology_dims(K.zero_lts(2), rc["zero2/trivial1"], 2) == [2, 2]


def test_table_rows():
    rows = cohomology_table(K.sl2_lts(), adjoint_rep(K.sl2_lts()), 2)
    assert rows == [{"n": 1, "dim_c": 9, "rank": 6, "dim_h": 3},
                    {"n": 2, "dim_c": 24, "rank": 18, "dim_h": 0}]


@pytest.mark.parametrize("seed", [1, 5, 9])
def test_shuffle_invariance_small(seed):
    for rep in SMALL.values():
        assert cohomology_dims(rep.base, rep, 2, seed) == cohomology_dims(rep.base, rep, 2)


def test_identity_coboundary_is_twice_pi():
    sl2 = K.sl2_lts()
    ident = MultiMap.on(sl2.space, 1, identity(3))
    assert coboundary(sl2, adjoint_rep(sl2), ident) == sl2.structure * 2


@pytest.mark.parametrize("name", list(K.lts_corpus()))
def test_oracle_degree_one(name):
    assert oracle_delta_vs_bracket(K.lts_corpus()[name], 1).passed


def test_oracle_rejects_non_lts():
    with pytest.raises(UsageError):
        oracle_delta_vs_bracket(K.nambu_not_lts(), 1)


def test_preconditions():
    sl2 = K.sl2_lts()
    with pytest.raises(UsageError):
        cohomology_table(sl2, adjoint_rep(sl2), 0)
    with pytest.raises(UsageError):
        coboundary_matrix(sl2, adjoint_rep(K.zero_lts(3)), 1)
    mats = adjoint_rep(sl2).matrices.copy()
    mats[0, 1] = mats[0, 1] * 3
    with pytest.raises(PreconditionError):
        cohomology_table(sl2, Rep.from_matrices(sl2, sl2.space, mats), 1)


@given(st.lists(st.integers(-3, 3), min_size=24, max_size=24))
def test_coboundaries_are_cocycles(coeffs):
    sl2 = K.sl2_lts()
    ad = adjoint_rep(sl2)
    basis = cochain_basis(sl2, ad, 2)
    f = basis.element(np.array(coeffs, dtype=object))
    df = coboundary(sl2, ad, f)
    assert is_lts_cochain(df).passed
    assert is_cocycle(sl2, ad, df)


def test_matrices_chain():
    rep = K.rep_corpus()["nonabelian2/adjoint"]
    bases, mats = coboundary_matrices(rep.base, rep, 2)
    assert [len(b) for b in bases] == [4, 4, 16]
    assert table_from_matrices(bases, mats)[1]["dim_h"] == 1


def test_empty_cochain_space():
    g = K.zero_lts(1)
    basis = cochain_basis(g, adjoint_rep(g), 2)
    assert len(basis) == 0
    assert basis.element([]).is_zero()
    assert basis.elements().shape == (0, 1, 1, 1, 1)
