import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from triplesys import corpus as K
from triplesys.algebras import NAMBU, Rep, adjoint_rep, check_nambu
from triplesys.errors import PreconditionError, UsageError
from triplesys.exactlin import identity
from triplesys.multilinear import MultiMap, Space
from triplesys.twoterm import corpus as TC
from triplesys.twoterm.categorify import (TwoVectorSystem, alpha_iso, categorify, check_alpha,
                                          check_beta, check_two_vector, transformed)
from triplesys.twoterm.classify import (CrossedModule, check_crossed_module, crossed_to_strict,
                                        identity_crossed_module, quadruple_to_skeletal,
                                        skeletal_to_quadruple, strict_to_crossed)
from triplesys.twoterm.homs import (AS_PRINTED, CORRECTED, CYCLIC, NATURAL, TwoHom, TwoTermHom, check_hom,
                                    check_two_hom, compose_hom, horizontal_compose, identity_hom,
                                    shifted_hom, transport, vertical_compose, zero_two_hom)
from triplesys.twoterm.systems import CONDITIONS, TwoTermSystem, check_two_term

SYSTEMS = TC.systems()
SEEDS = st.integers(0, 10 ** 6)


@pytest.mark.parametrize("name", list(SYSTEMS))
def test_corpus_systems_pass(name):
    r = check_two_term(SYSTEMS[name])
    assert r.passed and r.identities == list(CONDITIONS)


def test_skeletal_and_strict_flags():
    assert SYSTEMS["skeletal/nonabelian2_cocycle"].is_skeletal()
    assert not SYSTEMS["skeletal/nonabelian2_cocycle"].is_strict()
    assert SYSTEMS["strict/id_sl2"].is_strict()
    assert not SYSTEMS["strict/id_sl2"].is_skeletal()


def test_perturbed_j_fails_coherence():
    sys = SYSTEMS["skeletal/nonabelian2_cocycle"]
    j = sys.j.data.copy()
    j[0, 1, 0, 1, 0, 0] += 1
    j[0, 1, 1, 0, 0, 0] -= 1
    r = check_two_term(sys.replace(j=j))
    assert not r.passed and r.ok("f")


def test_bad_domains_rejected():
    g = Space.standard(2)
    with pytest.raises(UsageError):
        TwoTermSystem(g, g, identity(2), MultiMap.on(g, 3), MultiMap.on(g, 3), MultiMap.on(g, 3),
                      MultiMap.on(g, 3), MultiMap.on(g, 4))


# skeletal and strict correspondences


@pytest.mark.parametrize("name", list(TC.skeletal_systems()))
def test_skeletal_round_trip(name):
    sys = TC.skeletal_systems()[name]
    lts, v, theta, omega = skeletal_to_quadruple(sys)
    assert quadruple_to_skeletal(lts, v, theta, omega) == sys


def test_skeletal_from_cocycle_nontrivial():
    nab = K.lts_corpus()["nonabelian2"]
    omega = TC.nontrivial_cocycle(nab, adjoint_rep(nab))
    assert omega is not None and not omega.is_zero()
    q = skeletal_to_quadruple(quadruple_to_skeletal(nab, nab.space, adjoint_rep(nab), omega))
    assert q[3] == omega


def test_skeletal_preconditions():
    sl2 = K.sl2_lts()
    ad = adjoint_rep(sl2)
    arr = np.zeros((3,) * 6, dtype=int).astype(object)
    arr[0, 1, 0, 1, 2, 0] = 1  # breaks the skew condition on the last slots
    bad = MultiMap.on(sl2.space, 5, arr)
    with pytest.raises(PreconditionError):
        quadruple_to_skeletal(sl2, sl2.space, ad, bad)
    with pytest.raises(PreconditionError):
        skeletal_to_quadruple(SYSTEMS["strict/id_sl2"])


@pytest.mark.parametrize("name", list(TC.crossed_modules()))
def test_crossed_round_trip(name):
    cm = TC.crossed_modules()[name]
    assert check_crossed_module(cm).passed
    sys = crossed_to_strict(cm)
    assert check_two_term(sys).passed and sys.is_strict()
    assert strict_to_crossed(sys) == cm
    assert crossed_to_strict(strict_to_crossed(sys)) == sys


def test_strict_requires_zero_j():
    with pytest.raises(PreconditionError):
        strict_to_crossed(SYSTEMS["skeletal/nonabelian2_cocycle"])


def test_bad_crossed_module():
    cm = identity_crossed_module(K.sl2_lts())
    bad = CrossedModule(cm.g, cm.h, identity(3) * 2, cm.theta)
    r = check_crossed_module(bad)
    assert not r.passed and not r.ok("cmc2")


# categorification


@pytest.mark.parametrize("name", list(SYSTEMS))
def test_beta_round_trip(name):
    assert check_beta(SYSTEMS[name]).passed


@pytest.mark.parametrize("name", list(SYSTEMS))
def test_alpha_round_trip(name):
    L = categorify(SYSTEMS[name])
    assert check_two_vector(L).passed
    assert check_alpha(L).passed


@given(SEEDS)
def test_alpha_in_random_morphism_basis(seed):
    sys = SYSTEMS["skeletal/nonabelian2_cocycle"]
    L = categorify(sys)
    m = K.random_invertible(L.l1.dim, random.Random(seed))
    Lm = transformed(L, m)
    assert check_two_vector(Lm).passed
    assert check_alpha(Lm).passed
    assert alpha_iso(Lm).shape == (L.l1.dim, L.l1.dim)


def test_composition_in_two_vector_space():
    L = categorify(SYSTEMS["strict/id_nonabelian2"])
    n0 = L.l0.dim
    u = np.array([1, 0, 1, 0], dtype=object)  # x + f, from x to x + df
    b = L.t.dot(u)
    v = np.concatenate([b, np.array([0, 1], dtype=object)])
    w = L.compose(u, v)
    assert list(L.s.dot(w)) == list(L.s.dot(u)) and list(L.t.dot(w)) == list(L.t.dot(v))
    with pytest.raises(UsageError):
        L.compose(u, np.zeros(n0 + 2, dtype=object) + 1)


def test_broken_two_vector_detected():
    L = categorify(SYSTEMS["skeletal/sl2_cocycle"])
    mor = L.mor.data.copy()
    mor[0, 1, 2, 0] += 1
    bad = TwoVectorSystem.build(L.l0, L.l1, L.s, L.t, L.i, L.obj.data, mor, L.j_iso.data)
    assert not check_two_vector(bad).passed


# homomorphisms and 2-homomorphisms

CHAIN_SYSTEMS = ["skeletal/nonabelian2_cocycle", "skeletal/zero2_trivial", "strict/id_nonabelian2",
                 "strict/id_sl2", "degenerate/sl2_only"]


@pytest.mark.parametrize("name", CHAIN_SYSTEMS)
def test_hom_chain_composites(name):
    f, g, h = TC.hom_chain(SYSTEMS[name], seed=3)
    for x in (f, g, h, compose_hom(f, g), compose_hom(g, h)):
        assert check_hom(x).passed
    assert compose_hom(compose_hom(f, g), h) == compose_hom(f, compose_hom(g, h))
    assert compose_hom(identity_hom(f.src), f) == f == compose_hom(f, identity_hom(f.dst))


@pytest.mark.parametrize("name", CHAIN_SYSTEMS)
@given(seed=SEEDS)
def test_two_hom_compositions(name, seed):
    rng = random.Random(seed)
    f, g, _ = TC.hom_chain(SYSTEMS[name], seed=seed % 17)
    t1 = TC.random_two_hom(f.src, f.dst, rng)
    f2 = shifted_hom(f, t1)
    assert check_hom(f2).passed and check_two_hom(t1, f, f2).passed
    t2 = TC.random_two_hom(f.src, f.dst, rng)
    f3 = shifted_hom(f2, t2)
    assert check_two_hom(vertical_compose(t2, t1), f, f3).passed
    assert vertical_compose(zero_two_hom(f), t1) == t1
    assert check_two_hom(zero_two_hom(f), f, f).passed
    s = TC.random_two_hom(g.src, g.dst, rng)
    g2 = shifted_hom(g, s)
    h = horizontal_compose(s, t1, f, g, g2, CORRECTED)
    assert check_two_hom(h, compose_hom(f, g), compose_hom(f2, g2)).passed


def test_as_printed_horizontal_rule_fails():
    sys = SYSTEMS["strict/id_nonabelian2"]
    f, g, _ = TC.hom_chain(sys, seed=1)
    t = TwoHom(np.array([[1, 0], [0, 1]], dtype=object))
    s = TwoHom(np.array([[1, 1], [0, 1]], dtype=object))
    f2, g2 = shifted_hom(f, t), shifted_hom(g, s)
    bad = horizontal_compose(s, t, f, g, g2, AS_PRINTED)
    assert not check_two_hom(bad, compose_hom(f, g), compose_hom(f2, g2)).passed


def test_cyclic_reading_is_not_consistent():
    sys = SYSTEMS["strict/id_sl2"]
    f = identity_hom(sys)
    t = TwoHom(identity(3))
    psi = shifted_hom(f, t, CYCLIC)
    assert not check_hom(psi).passed
    assert check_hom(shifted_hom(f, t, NATURAL)).passed


def test_transport_is_iso():
    sys = SYSTEMS["skeletal/nonabelian2_cocycle"]
    new, iso = transport(sys, [[1, 1], [0, 1]], [[2, 0], [0, 1]])
    assert check_two_term(new).passed and check_hom(iso).passed
    with pytest.raises(UsageError):
        compose_hom(iso, iso)


def test_negative_adjoint_is_not_crossed():
    cm = identity_crossed_module(K.sl2_lts())
    neg = Rep.from_matrices(cm.g, cm.g.space, -adjoint_rep(cm.g).matrices)
    r = check_crossed_module(CrossedModule(cm.g, cm.h, cm.mu, neg))
    assert not r.ok("cmc1")


def test_identity_on_lts_between_distinct_cocycles_fails_homo6():
    a = SYSTEMS["skeletal/nonabelian2_cocycle"]
    b = SYSTEMS["skeletal/nonabelian2_exact"]
    f = TwoTermHom.build(a, b, identity(2), identity(2))
    r = check_hom(f)
    assert r.ok("homo1") and not r.ok("homo6")


def test_condition_h_detects_missing_jacobiator():
    a = K.broken_nambu().as_kind("lts")
    assert not check_nambu(a.as_kind(NAMBU)).passed
    sys = TwoTermSystem.build(a.space, Space(("f",)), d=[[1]], b000=a.data)
    r = check_two_term(sys)
    assert not r.ok("h") and len(r.failed("h")[0].witness) == 5
