"""Lie triple 2-systems on 2-vector spaces and the functors to and from
2-term homotopy Lie triple systems.

A 2-vector space is stored by matrices: objects L_0, morphisms L_1,
source and target s, t: L_1 -> L_0 and identities i: L_0 -> L_1.
Composition of composable morphisms u: a -> b and v: b -> c is
u + v - i(b), the standard structure imported with 2-vector spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import CheckReport
from ..errors import PreconditionError, UsageError
from ..exactlin import as_matrix, identity, inverse, kernel_basis, matmul, normalized, rank, zeros
from ..multilinear import MultiMap, Space
from ..multilinear import contract as C
from .homs import TwoTermHom, check_hom, pull, push
from .systems import TwoTermSystem, check_two_term, fi_lhs, fi_rhs

DEG_MINUS_ONE = "[-1]"


def _frozen(m, shape):
    a = as_matrix(m, shape) if np.size(m) else zeros(*shape)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class TwoVectorSystem:
    l0: Space
    l1: Space
    s: np.ndarray  # (n0, N)
    t: np.ndarray  # (n0, N)
    i: np.ndarray  # (N, n0)
    obj: MultiMap  # L_0^3 -> L_0
    mor: MultiMap  # L_1^3 -> L_1
    j_iso: MultiMap  # L_0^5 -> L_1

    @classmethod
    def build(cls, l0, l1, s, t, i, obj=None, mor=None, j_iso=None) -> "TwoVectorSystem":
        n0, n = l0.dim, l1.dim
        return cls(l0, l1, _frozen(s, (n0, n)), _frozen(t, (n0, n)), _frozen(i, (n, n0)),
                   MultiMap((l0,) * 3, l0, obj), MultiMap((l1,) * 3, l1, mor),
                   MultiMap((l0,) * 5, l1, j_iso))

    def compose(self, u, v) -> np.ndarray:
        """v after u for morphism vectors with t(u) = s(v)."""
        b = matmul(self.t, u)
        if np.any(b != matmul(self.s, v)):
            raise UsageError("morphisms are not composable")
        return u + v - matmul(self.i, b)

    def __eq__(self, other):
        if not isinstance(other, TwoVectorSystem):
            return NotImplemented
        same = lambda a, b: a.shape == b.shape and not np.any(a != b)  # noqa: E731
        return (self.l0 == other.l0 and self.l1 == other.l1 and same(self.s, other.s)
                and same(self.t, other.t) and same(self.i, other.i) and self.obj == other.obj
                and self.mor == other.mor and self.j_iso == other.j_iso)

    __hash__ = None


def categorify(sys: TwoTermSystem) -> TwoVectorSystem:
    """L_0 = T_0, L_1 = T_0 + T_{-1}, s(x+f) = x, t(x+f) = x + df."""
    n0, n1 = sys.n0, sys.n1
    D, T, A, B, Cm, J = sys.arrays()
    l1 = Space.direct_sum(sys.t0, Space(tuple(lab + DEG_MINUS_ONE for lab in sys.t1.labels)))
    ob, mo = slice(0, n0), slice(n0, n0 + n1)
    s = np.concatenate([identity(n0), zeros(n0, n1)], axis=1)
    t = np.concatenate([identity(n0), D], axis=1)
    i = np.concatenate([identity(n0), zeros(n1, n0)], axis=0)
    m = zeros(*(n0 + n1,) * 4)
    m[ob, ob, ob, ob] = T
    m[ob, ob, ob, mo] = 0
    # T_{-1} part: [x,y,h] + [x,g,z] + [f,y,z] + [df,g,z] + [df,y,h] + [x,dg,h] + [df,dg,h]
    m[ob, ob, mo, mo] = A
    m[ob, mo, ob, mo] = B
    m[mo, ob, ob, mo] = Cm
    m[mo, mo, ob, mo] = pull(B, [D, None, None])
    m[mo, ob, mo, mo] = pull(A, [D, None, None])
    m[ob, mo, mo, mo] = pull(A, [None, D, None])
    m[mo, mo, mo, mo] = pull(A, [D, D, None])
    jiso = np.concatenate([fi_lhs(T), J], axis=-1)
    return TwoVectorSystem.build(sys.t0, l1, s, t, i, T, normalized(m), normalized(jiso))


def kernel_of_source(L: TwoVectorSystem):
    """(K, free): columns of K span ker s, and K[free] is the identity."""
    basis = kernel_basis(L.s)
    n = L.l1.dim
    K = np.stack(basis, axis=1) if basis else zeros(n, 0)
    return K, [_free_index(basis, k) for k in range(len(basis))]


def _free_index(basis, k):
    v = basis[k]
    for c in range(len(v)):
        if v[c] == 1 and all(w[c] == 0 for j, w in enumerate(basis) if j != k):
            return c
    raise AssertionError("kernel basis is not in free-column form")


def decategorify(L: TwoVectorSystem) -> TwoTermSystem:
    """T_0 = L_0, T_{-1} = ker s with d = t restricted to ker s."""
    K, free = kernel_of_source(L)
    t0 = L.l0
    t1 = Space(tuple(L.l1.labels[c] for c in free))
    coord = lambda arr: arr[..., free]  # noqa: E731  coordinates of ker s elements
    M, I = L.mor.data, L.i
    d = matmul(L.t, K)
    b001 = coord(pull(M, [I, I, K]))
    b010 = coord(pull(M, [I, K, I]))
    b100 = coord(pull(M, [K, I, I]))
    jj = L.j_iso.data
    j = coord(jj - push(push(jj, L.s), I))
    return TwoTermSystem.build(t0, t1, d, L.obj.data, b001, b010, b100, j)


def check_two_vector(L: TwoVectorSystem) -> CheckReport:
    """Functor laws of the structure maps and the bracket, the source and
    target of the fundamentor, and the underlying 2-term conditions."""
    n0 = L.l0.dim
    s, t, i = L.s, L.t, L.i
    M, T, JJ = L.mor.data, L.obj.data, L.j_iso.data
    l0, l1 = L.l0, L.l1
    r = CheckReport()
    r.compare("si", matmul(s, i).T, identity(n0), (l0,))
    r.compare("ti", matmul(t, i).T, identity(n0), (l0,))
    r.compare("source", push(M, s), pull(T, [s, s, s]), (l1,) * 3)
    r.compare("target", push(M, t), pull(T, [t, t, t]), (l1,) * 3)
    r.compare("identity", pull(M, [i, i, i]), push(T, i), (l0,) * 3)
    r.compare("antisymmetry", M, -C("vuwo->uvwo", M), (l1,) * 3)
    r.compare("cyclic", M + C("vwuo->uvwo", M) + C("wuvo->uvwo", M), zeros(*M.shape), (l1,) * 3)
    r.compare("fundamentor_source", push(JJ, s), fi_lhs(T), (l0,) * 5)
    r.compare("fundamentor_target", push(JJ, t), fi_rhs(T), (l0,) * 5)
    if r.passed:
        r.merge(check_two_term(decategorify(L)), "underlying_")
    return r


# the round-trip isomorphisms ---------------------------------------------------------


def beta_iso(sys: TwoTermSystem) -> TwoTermHom:
    """decategorify(categorify(sys)) -> sys: identity on T_0, ker s = T_{-1}."""
    L = categorify(sys)
    src = decategorify(L)
    K, _ = kernel_of_source(L)
    phi1 = K[sys.n0:, :]  # the T_{-1} block of each ker s basis vector
    if np.any(K[: sys.n0, :] != 0):
        raise AssertionError("ker s has a component along T_0")
    return TwoTermHom.build(src, sys, identity(sys.n0), phi1)


def check_beta(sys: TwoTermSystem) -> CheckReport:
    """beta is a strict invertible homomorphism transporting every table."""
    b = beta_iso(sys)
    r = check_hom(b)
    n1 = sys.n1
    r.compare("beta_invertible", [[rank(b.phi1) == n1]], [[True]])
    if n1:
        inv = inverse(b.phi1)
        src = b.src
        # transport src tables along beta and compare with sys
        r.compare("beta_d", matmul(src.d, inv).T, sys.d.T, (sys.t1,))
        r.compare("beta_b001", push(pull(src.b001.data, [None, None, inv]), b.phi1), sys.b001.data,
                  (sys.t0, sys.t0, sys.t1))
        r.compare("beta_b010", push(pull(src.b010.data, [None, inv, None]), b.phi1), sys.b010.data,
                  (sys.t0, sys.t1, sys.t0))
        r.compare("beta_b100", push(pull(src.b100.data, [inv, None, None]), b.phi1), sys.b100.data,
                  (sys.t1, sys.t0, sys.t0))
        r.compare("beta_j", push(src.j.data, b.phi1), sys.j.data, (sys.t0,) * 5)
    r.compare("beta_b000", b.src.b000.data, sys.b000.data, (sys.t0,) * 3)
    return r


def alpha_iso(L: TwoVectorSystem) -> np.ndarray:
    """(alpha_L)_1(x + f) = i(x) + f on L_0 + ker s; (alpha_L)_0 is the identity."""
    K, _ = kernel_of_source(L)
    return np.concatenate([L.i, K], axis=1)


def check_alpha(L: TwoVectorSystem) -> CheckReport:
    """alpha_L: categorify(decategorify(L)) -> L is an isomorphism of Lie triple 2-systems."""
    Lp = categorify(decategorify(L))
    a = alpha_iso(L)
    l0, l1p = L.l0, Lp.l1
    r = CheckReport()
    r.compare("alpha_invertible", [[a.shape[0] == a.shape[1] and rank(a) == a.shape[0]]], [[True]])
    r.compare("alpha_source", matmul(L.s, a).T, Lp.s.T, (l1p,))
    r.compare("alpha_target", matmul(L.t, a).T, Lp.t.T, (l1p,))
    r.compare("alpha_identity", matmul(a, Lp.i).T, L.i.T, (l0,))
    r.compare("alpha_objects", Lp.obj.data, L.obj.data, (l0,) * 3)
    r.compare("alpha_bracket", push(Lp.mor.data, a), pull(L.mor.data, [a, a, a]), (l1p,) * 3)
    r.compare("alpha_fundamentor", push(Lp.j_iso.data, a), L.j_iso.data, (l0,) * 5)
    return r


def transformed(L: TwoVectorSystem, m) -> TwoVectorSystem:
    """The same Lie triple 2-system in new morphism coordinates u' = m u."""
    m = as_matrix(m, (L.l1.dim, L.l1.dim))
    if rank(m) != L.l1.dim:
        raise PreconditionError("change of basis is not invertible")
    mi = inverse(m)
    l1 = Space(tuple(f"{lab}'" for lab in L.l1.labels))
    mor = push(pull(L.mor.data, [mi, mi, mi]), m)
    return TwoVectorSystem.build(L.l0, l1, matmul(L.s, mi), matmul(L.t, mi), matmul(m, L.i),
                                 L.obj.data, normalized(mor), normalized(push(L.j_iso.data, m)))

