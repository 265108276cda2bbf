"""Small named algebras and representations used by tests, docs and the CLI."""

from __future__ import annotations

import random

import numpy as np

from . import algebras as alg
from .algebras import LIE, LTS, NAMBU, Algebra, Rep
from .exactlin import identity
from .multilinear import Space


def abelian_lie(n: int) -> Algebra:
    return Algebra.zero(LIE, Space.standard(n))


def sl2() -> Algebra:
    g = Space(("h", "e", "f"))
    table = {
        (0, 1): {"e": 2}, (1, 0): {"e": -2},
        (0, 2): {"f": -2}, (2, 0): {"f": 2},
        (1, 2): {"h": 1}, (2, 1): {"h": -1},
    }
    return Algebra.from_table(LIE, g, table)


def so3() -> Algebra:
    g = Space(("x", "y", "z"))
    table = {
        (0, 1): {"z": 1}, (1, 0): {"z": -1},
        (1, 2): {"x": 1}, (2, 1): {"x": -1},
        (2, 0): {"y": 1}, (0, 2): {"y": -1},
    }
    return Algebra.from_table(LIE, g, table)


def nonabelian_2d() -> Algebra:
    """[e0, e1] = e1."""
    g = Space.standard(2)
    return Algebra.from_table(LIE, g, {(0, 1): {"e1": 1}, (1, 0): {"e1": -1}})


def heisenberg() -> Algebra:
    g = Space(("p", "q", "c"))
    return Algebra.from_table(LIE, g, {(0, 1): {"c": 1}, (1, 0): {"c": -1}})


def sl2_lts() -> Algebra:
    return alg.lts_from_lie(sl2())


def zero_lts(n: int) -> Algebra:
    return Algebra.zero(LTS, Space.standard(n))


def broken_nambu() -> Algebra:
    """dim 1, [e, e, e] = e; violates the fundamental identity."""
    return Algebra.from_table(NAMBU, Space(("e",)), {(0, 0, 0): {"e": 1}})


def nambu_not_lts() -> Algebra:
    """[e1, e1, e1] = e0 on a 2-dim space.

    Every iterated bracket vanishes (the image has no e1 component), so the
    fundamental identity holds, while [x, x, y] = 0 fails.
    """
    return Algebra.from_table(NAMBU, Space.standard(2), {(1, 1, 1): {"e0": 1}})


def random_invertible(n: int, rng: random.Random, bound: int = 2, steps: int = 6) -> np.ndarray:
    """Random unimodular integer matrix (a product of elementary shears and a permutation).

    Unimodularity keeps structure constants integral after a change of basis.
    """
    a = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            a[i] = a[i] + rng.randint(-bound, bound) * a[j]
    perm = list(range(n))
    rng.shuffle(perm)
    return a[perm]


def random_lts(seed: int = 0) -> Algebra:
    """sl2-LTS written in a random rational basis (an LTS by construction)."""
    rng = random.Random(seed)
    return sl2_lts().transformed(random_invertible(3, rng))


def sl2_standard_rep(lts: Algebra | None = None) -> Rep:
    """rho(x, y) = s(y) s(x) for the defining 2-dim representation s of sl2."""
    sigma = np.array([
        [[1, 0], [0, -1]],   # h
        [[0, 1], [0, 0]],    # e
        [[0, 0], [1, 0]],    # f
    ], dtype=object)
    return alg.lie_rep_to_lts_rep(lts or sl2_lts(), sigma)


def lie_algebras() -> dict[str, Algebra]:
    return {
        "abelian2": abelian_lie(2),
        "nonabelian2": nonabelian_2d(),
        "sl2": sl2(),
        "so3": so3(),
        "heisenberg": heisenberg(),
    }


def lts_corpus() -> dict[str, Algebra]:
    """Lie triple systems of dimension <= 3."""
    return {
        "zero1": zero_lts(1),
        "zero2": zero_lts(2),
        "nonabelian2": alg.lts_from_lie(nonabelian_2d()),
        "sl2": sl2_lts(),
        "so3": alg.lts_from_lie(so3()),
        "random_sl2": random_lts(7),
    }


def triple_corpus() -> dict[str, Algebra]:
    """Ternary algebras for the Maurer-Cartan criteria: LTS, Nambu, neither."""
    out = dict(lts_corpus())
    out["broken_nambu"] = broken_nambu()
    out["nambu_not_lts"] = nambu_not_lts()
    # LTS-kind algebras failing some axiom
    out["skew_missing"] = Algebra.from_table(LTS, Space.standard(2), {(0, 1, 0): {"e0": 1}})
    out["broken_lts"] = broken_nambu().as_kind(LTS)
    return out


def rep_corpus() -> dict[str, Rep]:
    """(LTS, representation) pairs of dimension <= 3."""
    out = {}
    for name, a in lts_corpus().items():
        out[f"{name}/adjoint"] = alg.adjoint_rep(a)
    out["zero2/trivial1"] = Rep.zero(zero_lts(2), Space(("v",)))
    out["nonabelian2/trivial1"] = Rep.zero(alg.lts_from_lie(nonabelian_2d()), Space(("v",)))
    out["sl2/standard"] = sl2_standard_rep()
    return out
