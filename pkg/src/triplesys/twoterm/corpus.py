"""Reference 2-term systems, crossed modules and homomorphisms."""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np

from .. import corpus as base
from ..algebras import LTS, Algebra, Rep, adjoint_rep
from ..cohomology import cochain_basis, coboundary, coboundary_matrix
from ..exactlin import kernel_basis, rank
from ..multilinear import MultiMap, Space
from .classify import CrossedModule, crossed_to_strict, identity_crossed_module, quadruple_to_skeletal
from .homs import TwoHom, TwoTermHom, shifted_hom, transport
from .systems import TwoTermSystem


def nontrivial_cocycle(lts: Algebra, rep: Rep) -> MultiMap | None:
    """First kernel vector of delta_3 that is not a coboundary, or None."""
    src = cochain_basis(lts, rep, 3)
    d3 = coboundary_matrix(lts, rep, 3, src)
    d2 = coboundary_matrix(lts, rep, 2, None, src)
    r2 = rank(d2)
    for v in kernel_basis(d3):
        if rank(np.concatenate([d2, v[:, None]], axis=1)) > r2:
            return src.element(v)
    return None


def exact_cocycle(lts: Algebra, rep: Rep) -> MultiMap:
    """delta of the first basis 2-cochain whose coboundary is nonzero."""
    basis = cochain_basis(lts, rep, 2)
    for i in range(len(basis)):
        f = coboundary(lts, rep, basis[i])
        if not f.is_zero():
            return f
    return coboundary(lts, rep, basis[0]) if len(basis) else MultiMap((lts.space,) * 5, rep.space)


def crossed_modules() -> dict[str, CrossedModule]:
    sl2, nab = base.sl2_lts(), base.lts_corpus()["nonabelian2"]
    zero = base.zero_lts(1)
    abelian_v = Algebra.zero(LTS, Space(("u0", "u1", "u2")))
    return {
        "id_sl2": identity_crossed_module(sl2),
        "id_nonabelian2": identity_crossed_module(nab),
        "zero": CrossedModule(zero, zero, [[0]], Rep.zero(zero, zero.space)),
        "abelian_over_sl2": CrossedModule(
            abelian_v, sl2, np.zeros((3, 3), dtype=object),
            Rep.from_matrices(sl2, abelian_v.space, adjoint_rep(sl2).matrices)),
    }


def skeletal_systems() -> dict[str, TwoTermSystem]:
    return dict(_skeletal_systems())


@lru_cache(maxsize=1)
def _skeletal_systems() -> dict[str, TwoTermSystem]:
    sl2, nab = base.sl2_lts(), base.lts_corpus()["nonabelian2"]
    zero2 = base.zero_lts(2)
    trivial = Rep.zero(zero2, Space(("v",)))
    omega_zero2 = cochain_basis(zero2, trivial, 3)[0]
    nab_ad = adjoint_rep(nab)
    return {
        "sl2_adjoint": quadruple_to_skeletal(sl2, sl2.space, adjoint_rep(sl2)),
        "sl2_cocycle": quadruple_to_skeletal(sl2, sl2.space, adjoint_rep(sl2),
                                             nontrivial_cocycle(sl2, adjoint_rep(sl2))),
        "nonabelian2_cocycle": quadruple_to_skeletal(nab, nab.space, nab_ad,
                                                     nontrivial_cocycle(nab, nab_ad)),
        "nonabelian2_exact": quadruple_to_skeletal(nab, nab.space, nab_ad,
                                                   exact_cocycle(nab, nab_ad)),
        "zero2_trivial": quadruple_to_skeletal(zero2, trivial.space, trivial, omega_zero2),
        "sl2_standard": quadruple_to_skeletal(sl2, base.sl2_standard_rep().space,
                                              base.sl2_standard_rep()),
    }


def strict_systems() -> dict[str, TwoTermSystem]:
    return {name: crossed_to_strict(cm) for name, cm in crossed_modules().items()}


def degenerate_systems() -> dict[str, TwoTermSystem]:
    """T_{-1} = 0 over each corpus LTS."""
    return {f"{name}_only": TwoTermSystem.from_lts(a) for name, a in base.lts_corpus().items()}


def systems() -> dict[str, TwoTermSystem]:
    out = {}
    out.update({f"skeletal/{k}": v for k, v in skeletal_systems().items()})
    out.update({f"strict/{k}": v for k, v in strict_systems().items()})
    out.update({f"degenerate/{k}": v for k, v in degenerate_systems().items()})
    return out


def random_two_hom(sys_src: TwoTermSystem, sys_dst: TwoTermSystem, rng: random.Random,
                   bound: int = 2) -> TwoHom:
    return TwoHom(np.array([[rng.randint(-bound, bound) for _ in range(sys_src.n0)]
                            for _ in range(sys_dst.n1)], dtype=object).reshape(sys_dst.n1, sys_src.n0))


def hom_chain(sys: TwoTermSystem, seed: int = 0) -> list[TwoTermHom]:
    """Composable homomorphisms sys -> sys' -> sys'' -> sys''' with nonzero phi2 where possible."""
    rng = random.Random(seed)
    out, cur = [], sys
    for _ in range(3):
        a0 = base.random_invertible(cur.n0, rng)
        a1 = base.random_invertible(cur.n1, rng) if cur.n1 else np.zeros((0, 0), dtype=object)
        nxt, iso = transport(cur, a0, a1)
        out.append(shifted_hom(iso, random_two_hom(cur, nxt, rng)))
        cur = nxt
    return out

