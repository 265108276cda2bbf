"""Homomorphisms and 2-homomorphisms of 2-term homotopy Lie triple systems.

Matrices act on column vectors: ``phi0`` has shape (n0', n0) and column
``x`` is phi0(e_x).  ``phi2`` is stored as an array (n0, n0, n0, n1').

Chain homotopy convention: a 2-homomorphism ``tau: phi => psi`` satisfies
``psi0 - phi0 = d' tau`` and ``psi1 - phi1 = tau d``.  This is the sign for
which the 2-homomorphism equation (phi2 - psi2 = brackets in tau - tau[..])
is consistent, and it matches T(tau)(x) = (phi0 x, tau x).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import CheckReport
from ..controlling import last_three_defects
from ..errors import UsageError
from ..exactlin import as_matrix, identity, inverse, matmul, normalized, zeros
from ..multilinear import MultiMap, Space
from ..multilinear import contract as C
from .systems import TwoTermSystem

NATURAL, CYCLIC = "natural", "cyclic"
CORRECTED, AS_PRINTED = "corrected", "as-printed"


def pull(arr: np.ndarray, mats) -> np.ndarray:
    """Precompose argument axis i of ``arr`` with mats[i] (None leaves it)."""
    out = arr
    for i, m in enumerate(mats):
        if m is not None:
            out = np.moveaxis(np.tensordot(out, m, axes=([i], [0])), -1, i)
    return out


def push(arr: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Postcompose the value axis of ``arr`` with the matrix ``m``."""
    return np.tensordot(arr, m.T, axes=([arr.ndim - 1], [0]))


def _mat(m, rows, cols):
    a = as_matrix(m, (rows, cols)) if np.size(m) else zeros(rows, cols)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class TwoTermHom:
    src: TwoTermSystem
    dst: TwoTermSystem
    phi0: np.ndarray
    phi1: np.ndarray
    phi2: MultiMap

    @classmethod
    def build(cls, src, dst, phi0, phi1, phi2=None) -> "TwoTermHom":
        t0 = src.t0
        return cls(src, dst, _mat(phi0, dst.n0, src.n0), _mat(phi1, dst.n1, src.n1),
                   MultiMap((t0, t0, t0), dst.t1, phi2))

    def __eq__(self, other):
        if not isinstance(other, TwoTermHom):
            return NotImplemented
        return (self.src is other.src or self.src == other.src) and \
            (self.dst is other.dst or self.dst == other.dst) and \
            not np.any(self.phi0 != other.phi0) and not np.any(self.phi1 != other.phi1) and \
            self.phi2 == other.phi2

    __hash__ = None


def identity_hom(sys: TwoTermSystem) -> TwoTermHom:
    return TwoTermHom.build(sys, sys, identity(sys.n0), identity(sys.n1))


def check_hom(f: TwoTermHom, src: TwoTermSystem | None = None,
              dst: TwoTermSystem | None = None) -> CheckReport:
    """Chain map property and the six homomorphism equations on basis tuples."""
    src = f.src if src is None else src
    dst = f.dst if dst is None else dst
    D, T, A, B, Cm, J = src.arrays()
    D2, T2, A2, B2, Cm2, J2 = dst.arrays()
    P0, P1, P2 = f.phi0, f.phi1, f.phi2.data
    s0, s1 = src.t0, src.t1
    r = CheckReport()
    r.compare("chain", matmul(D2, P1).T, matmul(P0, D).T, (s1,))
    skew, cyc = last_three_defects(P2, 0)
    r.compare("homo1", skew, zeros(*P2.shape), (s0,) * 3)
    r.compare("homo2", cyc, zeros(*P2.shape), (s0,) * 3)
    r.compare("homo3", push(P2, D2), push(T, P0) - pull(T2, [P0, P0, P0]), (s0,) * 3)
    r.compare("homo4", pull(P2, [None, None, D]),
              push(A, P1) - pull(A2, [P0, P0, P1]), (s0, s0, s1))
    r.compare("homo5", pull(P2, [None, D, None]),
              push(B, P1) - pull(B2, [P0, P1, P0]), (s0, s1, s0))
    lhs = (pull(J2, [P0] * 5)
           + C("abcp,pdeo->abcdeo", P2, pull(Cm2, [None, P0, P0]))
           + C("abdp,cpeo->abcdeo", P2, pull(B2, [P0, None, P0]))
           + C("abep,cdpo->abcdeo", P2, pull(A2, [P0, P0, None]))
           + C("abcp,pdeo->abcdeo", T, P2)
           + C("abdp,cpeo->abcdeo", T, P2)
           + C("abep,cdpo->abcdeo", T, P2))
    rhs = (C("cdep,abpo->abcdeo", P2, pull(A2, [P0, P0, None]))
           + C("cdep,abpo->abcdeo", T, P2)
           + push(J, P1))
    r.compare("homo6", lhs, rhs, (s0,) * 5)
    return r


def compose_hom(f: TwoTermHom, g: TwoTermHom) -> TwoTermHom:
    """f first, then g: (g0 f0, g1 f1, g2(f0, f0, f0) + g1 f2)."""
    if not (f.dst is g.src or f.dst == g.src):
        raise UsageError("codomain of the first homomorphism is not the domain of the second")
    p2 = pull(g.phi2.data, [f.phi0] * 3) + push(f.phi2.data, g.phi1)
    return TwoTermHom.build(f.src, g.dst, matmul(g.phi0, f.phi0), matmul(g.phi1, f.phi1),
                            normalized(p2))


# 2-homomorphisms ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TwoHom:
    tau: np.ndarray

    def __post_init__(self):
        t = np.array(self.tau, dtype=object)
        if t.ndim != 2:
            raise UsageError("tau must be a matrix T_0 -> T'_{-1}")
        t = normalized(t)
        t.flags.writeable = False
        object.__setattr__(self, "tau", t)

    def __eq__(self, other):
        if not isinstance(other, TwoHom):
            return NotImplemented
        return self.tau.shape == other.tau.shape and not np.any(self.tau != other.tau)

    __hash__ = None


def zero_two_hom(f: TwoTermHom) -> TwoHom:
    return TwoHom(zeros(f.dst.n1, f.src.n0))


def _cyclic(g: np.ndarray) -> np.ndarray:
    """G(x1,x2,x3) + G(x2,x3,x1) + G(x3,x1,x2)."""
    return g + C("bcao->abco", g) + C("cabo->abco", g)


def two_hom_terms(tau: np.ndarray, f: TwoTermHom, reading: str = NATURAL) -> np.ndarray:
    """Right side of the 2-homomorphism equation as an (n0, n0, n0, n1') array.

    ``natural`` expands [a + d'tau, ...] - [a, ...] term by term: every
    placement of one tau with the remaining slots filled by phi0 or d'tau.
    ``cyclic`` sums the three displayed terms over cyclic permutations of
    (x1, x2, x3) literally.
    """
    dst = f.dst
    _, T, _, _, _, _ = f.src.arrays()
    D2, _, A2, B2, Cm2, _ = dst.arrays()
    a, t = f.phi0, matmul(D2, tau)
    if reading == NATURAL:
        terms = (pull(Cm2, [tau, a, a]) + pull(B2, [a, tau, a]) + pull(A2, [a, a, tau])
                 + pull(B2, [t, tau, a]) + pull(A2, [t, a, tau]) + pull(A2, [a, t, tau])
                 + pull(A2, [t, t, tau]))
    elif reading == CYCLIC:
        terms = _cyclic(pull(A2, [a, a, tau]) + pull(B2, [t, tau, a]) + pull(A2, [t, t, tau]))
    else:
        raise UsageError(f"unknown reading {reading!r}; use {NATURAL!r} or {CYCLIC!r}")
    return terms - push(T, tau)


def check_two_hom(tau: TwoHom, f: TwoTermHom, g: TwoTermHom,
                  reading: str = NATURAL) -> CheckReport:
    """Chain homotopy equations and the 2-homomorphism equation for tau: f => g."""
    if f.phi0.shape != g.phi0.shape or f.phi1.shape != g.phi1.shape:
        raise UsageError("homomorphisms do not share source and target")
    src, dst = f.src, f.dst
    t = tau.tau
    if t.shape != (dst.n1, src.n0):
        raise UsageError(f"tau has shape {t.shape}, expected {(dst.n1, src.n0)}")
    r = CheckReport()
    r.compare("homotopy0", (g.phi0 - f.phi0).T, matmul(dst.d, t).T, (src.t0,))
    r.compare("homotopy1", (g.phi1 - f.phi1).T, matmul(t, src.d).T, (src.t1,))
    r.compare("2hom", f.phi2.data - g.phi2.data, two_hom_terms(t, f, reading), (src.t0,) * 3)
    return r


def shifted_hom(f: TwoTermHom, tau: TwoHom, reading: str = NATURAL) -> TwoTermHom:
    """The homomorphism psi that tau: f => psi forces (target of tau from f)."""
    t = tau.tau
    psi0 = f.phi0 + matmul(f.dst.d, t)
    psi1 = f.phi1 + matmul(t, f.src.d)
    psi2 = f.phi2.data - two_hom_terms(t, f, reading)
    return TwoTermHom.build(f.src, f.dst, psi0, psi1, normalized(psi2))


def vertical_compose(tau2: TwoHom, tau: TwoHom) -> TwoHom:
    """tau: f => g then tau2: g => h gives tau2 + tau: f => h."""
    if tau.tau.shape != tau2.tau.shape:
        raise UsageError("2-homomorphisms have different shapes")
    return TwoHom(tau2.tau + tau.tau)


def horizontal_compose(tau2: TwoHom, tau: TwoHom, phi: TwoTermHom, phi_p: TwoTermHom,
                       psi_p: TwoTermHom, rule: str = CORRECTED) -> TwoHom:
    """tau: phi => psi on T -> T', tau2: phi' => psi' on T' -> T''.

    ``corrected`` returns tau2 phi0 + psi'1 tau, a 2-homomorphism between
    the composites.  ``as-printed`` returns tau2 phi0 + phi'1 tau, which
    misses the term tau2 d' tau.
    """
    if rule == CORRECTED:
        outer = psi_p.phi1
    elif rule == AS_PRINTED:
        outer = phi_p.phi1
    else:
        raise UsageError(f"unknown rule {rule!r}; use {CORRECTED!r} or {AS_PRINTED!r}")
    return TwoHom(matmul(tau2.tau, phi.phi0) + matmul(outer, tau.tau))


def transport(sys: TwoTermSystem, a0, a1) -> tuple[TwoTermSystem, TwoTermHom]:
    """sys in new coordinates x' = a0 x, f' = a1 f, with the strict isomorphism to it."""
    a0 = as_matrix(a0, (sys.n0, sys.n0))
    a1 = as_matrix(a1, (sys.n1, sys.n1)) if sys.n1 else zeros(0, 0)
    i0, i1 = inverse(a0), (inverse(a1) if sys.n1 else zeros(0, 0))
    D, T, A, B, Cm, J = sys.arrays()
    new = TwoTermSystem.build(
        Space(tuple(f"{x}'" for x in sys.t0.labels)), Space(tuple(f"{f}'" for f in sys.t1.labels)),
        matmul(matmul(a0, D), i1),
        normalized(push(pull(T, [i0, i0, i0]), a0)),
        normalized(push(pull(A, [i0, i0, i1]), a1)),
        normalized(push(pull(B, [i0, i1, i0]), a1)),
        normalized(push(pull(Cm, [i1, i0, i0]), a1)),
        normalized(push(pull(J, [i0] * 5), a1)))
    return new, TwoTermHom.build(sys, new, a0, a1)
