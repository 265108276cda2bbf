"""Skeletal systems versus (LTS, module, representation, 3-cocycle) and
strict systems versus crossed modules of Lie triple systems.

A representation theta of T_0 on T_{-1} fills the mixed brackets by

    [f, x, y] = theta(x, y) f
    [x, f, y] = -theta(x, y) f
    [x, y, f] = theta(y, x) f - theta(x, y) f
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import (LTS, Algebra, CheckReport, Rep, adjoint_rep, check_lts,
                        check_representation)
from ..cohomology import cochain_basis, coboundary
from ..errors import PreconditionError, UsageError
from ..exactlin import as_matrix, identity, zeros
from ..multilinear import MultiMap, Space
from ..multilinear import contract as C
from .systems import TwoTermSystem, check_two_term


def mixed_from_theta(R: np.ndarray):
    """(b001, b010, b100) from theta matrices R[x, y] of shape (n0, n0, n1, n1)."""
    b100 = C("xyof->fxyo", R)
    b010 = -C("xyof->xfyo", R)
    b001 = C("yxof->xyfo", R) - C("xyof->xyfo", R)
    return b001, b010, b100


def theta_from_system(sys: TwoTermSystem) -> Rep:
    """theta(x1, x2) f = [f, x1, x2] as a representation of T_0 on T_{-1}."""
    return Rep.from_matrices(sys.base_lts(), sys.t1, C("fxyo->xyof", sys.b100.data))


# skeletal ----------------------------------------------------------------------


def skeletal_to_quadruple(sys: TwoTermSystem):
    """(T_0 as an LTS, T_{-1}, theta, J) of a skeletal system."""
    if not sys.is_skeletal():
        raise PreconditionError("the differential is nonzero, the system is not skeletal")
    report = check_two_term(sys)
    if not report.passed:
        raise PreconditionError(f"not a 2-term homotopy LTS: {report.violations[0].describe()}")
    return sys.base_lts(), sys.t1, theta_from_system(sys), sys.j


def quadruple_to_skeletal(lts: Algebra, v: Space, theta: Rep, omega: MultiMap | None = None) -> TwoTermSystem:
    """Skeletal system with T_0 = lts, T_{-1} = v, d = 0 and J = omega."""
    if lts.kind != LTS:
        raise UsageError("expected a Lie triple system")
    if theta.space != v or theta.base.space != lts.space:
        raise UsageError("representation does not act on the given spaces")
    if not check_representation(theta).passed:
        raise PreconditionError("theta is not a representation")
    if omega is None:
        omega = MultiMap((lts.space,) * 5, v)
    if tuple(omega.domain) != (lts.space,) * 5 or omega.codomain != v:
        raise UsageError("omega must be a 3-cochain T_0^5 -> V")
    if not cochain_basis(lts, theta, 3).contains(omega):
        raise PreconditionError("omega violates the cochain constraints")
    if not coboundary(lts, theta, omega).is_zero():
        raise PreconditionError("omega is not a 3-cocycle")
    b001, b010, b100 = mixed_from_theta(theta.matrices)
    return TwoTermSystem.build(lts.space, v, None, lts.data, b001, b010, b100, omega.data)


# crossed modules -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CrossedModule:
    g: Algebra
    h: Algebra
    mu: np.ndarray  # (dim h, dim g)
    theta: Rep  # of h on the space of g

    def __post_init__(self):
        if self.g.kind != LTS or self.h.kind != LTS:
            raise UsageError("both algebras of a crossed module are Lie triple systems")
        if self.theta.space != self.g.space or self.theta.base.space != self.h.space:
            raise UsageError("theta must represent h on the space of g")
        mu = as_matrix(self.mu, (self.h.dim, self.g.dim)) if np.size(self.mu) \
            else zeros(self.h.dim, self.g.dim)
        mu.flags.writeable = False
        object.__setattr__(self, "mu", mu)

    def __eq__(self, other):
        if not isinstance(other, CrossedModule):
            return NotImplemented
        return (self.g == other.g and self.h == other.h and self.mu.shape == other.mu.shape
                and not np.any(self.mu != other.mu) and self.theta.rho == other.theta.rho)

    __hash__ = None


def check_crossed_module(cm: CrossedModule) -> CheckReport:
    """mu is an LTS map, theta a representation by derivations, (cmc1)-(cmc4)."""
    for name, a in (("g", cm.g), ("h", cm.h)):
        if not check_lts(a).passed:
            raise PreconditionError(f"{name} is not a Lie triple system")
    G, H, M, R = cm.g.data, cm.h.data, cm.mu, cm.theta.matrices
    sg, sh = cm.g.space, cm.h.space
    r = CheckReport()
    r.compare("mu_hom", C("fghp,op->fgho", G, M), C("Pf,Qg,Rh,PQRo->fgho", M, M, M, H), (sg,) * 3)
    r.merge(check_representation(cm.theta))
    # D(x, y) = theta(y, x) - theta(x, y) acts by derivations of g; theta(x, y)
    # itself need not ([., x, y] is no derivation of sl2 as an LTS)
    R = C("yxij->xyij", R) - R
    lhs = C("fghp,xyop->xyfgho", G, R)
    rhs = (C("xypf,pgho->xyfgho", R, G) + C("xypg,fpho->xyfgho", R, G)
           + C("xyph,fgpo->xyfgho", R, G))
    r.compare("derivation", lhs, rhs, (sh, sh, sg, sg, sg))
    R = cm.theta.matrices
    # (cmc1) mu(theta(x, y) f) = [mu f, x, y]_h
    r.compare("cmc1", C("op,xypf->xyfo", M, R), C("pf,pxyo->xyfo", M, H), (sh, sh, sg))
    # (cmc2) theta(mu f, mu g) h = [h, f, g]_g
    r.compare("cmc2", C("Pf,Qg,PQoh->fgho", M, M, R), C("hfgo->fgho", G), (sg, sg, sg))
    # (cmc3) mu(theta(x, mu f) g) = [mu g, x, mu f]_h
    r.compare("cmc3", C("op,Qf,xQpg->xfgo", M, M, R), C("Pg,Qf,PxQo->xfgo", M, M, H), (sh, sg, sg))
    # (cmc4) mu(theta(mu f, x) g) = [mu g, mu f, x]_h
    r.compare("cmc4", C("op,Qf,Qxpg->xfgo", M, M, R), C("Pg,Qf,PQxo->xfgo", M, M, H), (sh, sg, sg))
    return r


def strict_side_check(sys: TwoTermSystem) -> CheckReport:
    """[df, dg, h] = [df, g, dh] = [f, dg, dh] on T_{-1}."""
    D, _, A, B, Cm, _ = sys.arrays()
    first = C("Pf,Qg,PQho->fgho", D, D, A)
    r = CheckReport()
    r.compare("side", first, C("Pf,Qh,PgQo->fgho", D, D, B), (sys.t1,) * 3)
    r.compare("side", first, C("Pg,Qh,fPQo->fgho", D, D, Cm), (sys.t1,) * 3)
    return r


def strict_to_crossed(sys: TwoTermSystem, side_check: bool = True) -> CrossedModule:
    """(T_{-1} with [df, dg, h], T_0, d, theta) of a strict system."""
    if not sys.is_strict():
        raise PreconditionError("J is nonzero, the system is not strict")
    report = check_two_term(sys)
    if not report.passed:
        raise PreconditionError(f"not a 2-term homotopy LTS: {report.violations[0].describe()}")
    if side_check:
        side = strict_side_check(sys)
        if not side.passed:
            raise PreconditionError(f"bracket on T_{{-1}} is ill defined: {side.violations[0].describe()}")
    D, A = sys.d, sys.b001.data
    g_data = C("Pf,Qg,PQho->fgho", D, D, A)
    g = Algebra(LTS, sys.t1, MultiMap.on(sys.t1, 3, g_data))
    h = sys.base_lts()
    return CrossedModule(g, h, D, theta_from_system(sys))


def crossed_to_strict(cm: CrossedModule) -> TwoTermSystem:
    """Strict system with T_{-1} = g, T_0 = h, d = mu, J = 0."""
    report = check_crossed_module(cm)
    if not report.passed:
        raise PreconditionError(f"not a crossed module: {report.violations[0].describe()}")
    b001, b010, b100 = mixed_from_theta(cm.theta.matrices)
    return TwoTermSystem.build(cm.h.space, cm.g.space, cm.mu, cm.h.data, b001, b010, b100)


def identity_crossed_module(a: Algebra) -> CrossedModule:
    """(g, g, id, ad)."""
    return CrossedModule(a, a, identity(a.dim), adjoint_rep(a))
