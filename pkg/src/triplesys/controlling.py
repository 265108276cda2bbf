"""Controlling graded Lie algebras for Leibniz and Nambu/Lie-triple structures.

Cochains are plain :class:`MultiMap` objects on a single space ``g``:

* ``CL^n(g, g) = Hom(g^{(x) n+1}, g)`` -- arity ``n + 1``, Balavoine bracket;
* ``C^p(g, g) = Hom(g^{(x) 2p+1}, g)`` -- arity ``2p + 1``, read as ``p``
  tensor arguments ``X_i = x_i (x) y_i`` followed by one vector.

Brackets are assembled term by term with ``einsum``: each shuffle of a
composition formula becomes one contraction whose output subscripts are
permuted by the shuffle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebras import LTS, NAMBU, Algebra, _require
from .errors import UsageError
from .exactlin import identity, normalized, zeros
from .multilinear import LETTERS, MultiMap, Space, contract, shuffles

# letters reserved for the output axis and the contracted axis
_OUT, _MID = "Z", "Y"


def cl_degree(f: MultiMap) -> int:
    return f.arity - 1


def c_degree(f: MultiMap) -> int:
    if f.arity % 2 == 0:
        raise UsageError(f"arity {f.arity} is not of the form 2p+1")
    return (f.arity - 1) // 2


def _base_space(*maps: MultiMap) -> Space:
    g = maps[0].codomain
    for f in maps:
        if f.codomain != g or any(s != g for s in f.domain):
            raise UsageError("cochains must be maps g^n -> g on one common space g")
    return g


def _zero_data(g: Space, arity: int) -> np.ndarray:
    return zeros(*((g.dim,) * arity), g.dim)


def cochain(g: Space, arity: int, data=None) -> MultiMap:
    return MultiMap.on(g, arity, data)


# Balavoine bracket ----------------------------------------------------------


def _circ_k_cl(P: MultiMap, Q: MultiMap, k: int) -> np.ndarray:
    """P o_k Q on CL*, including the sign (-1)^{(k-1)q}."""
    p, q = cl_degree(P), cl_degree(Q)
    xs = LETTERS[: p + q + 1]
    out = xs + _OUT
    acc = _zero_data(P.codomain, p + q + 1)
    sign = -1 if ((k - 1) * q) % 2 else 1
    for sh in shuffles(k - 1, q):
        s = [xs[i - 1] for i in sh.perm]
        p_sub = "".join(s[: k - 1]) + _MID + xs[k + q:] + _OUT
        q_sub = "".join(s[k - 1:]) + xs[k + q - 1] + _MID
        term = contract(f"{p_sub},{q_sub}->{out}", P.data, Q.data)
        acc = acc + term if sign * sh.sign > 0 else acc - term
    return acc


def balavoine_compose(P: MultiMap, Q: MultiMap) -> MultiMap:
    g = _base_space(P, Q)
    p = cl_degree(P)
    acc = _zero_data(g, p + cl_degree(Q) + 1)
    for k in range(1, p + 2):
        acc = acc + _circ_k_cl(P, Q, k)
    return cochain(g, acc.ndim - 1, acc)


def balavoine_bracket(P: MultiMap, Q: MultiMap) -> MultiMap:
    """[P, Q]_B = P o Q - (-1)^{pq} Q o P."""
    p, q = cl_degree(P), cl_degree(Q)
    a, b = balavoine_compose(P, Q), balavoine_compose(Q, P)
    return a - b if (p * q) % 2 == 0 else a + b


# bracket on C*(g, g) -------------------------------------------------------------


def _pair_letters(n: int):
    xs = LETTERS[0:2 * n:2]
    ys = LETTERS[1:2 * n:2]
    return xs, ys, LETTERS[2 * n]


def _blocks(xs, ys, idx) -> str:
    return "".join(xs[i - 1] + ys[i - 1] for i in idx)


def _circ_k_c(P: MultiMap, Q: MultiMap, k: int) -> np.ndarray:
    """P o_k Q on C* (no sign factor); k <= p inserts into a tensor slot."""
    p, q = c_degree(P), c_degree(Q)
    n = p + q
    xs, ys, z = _pair_letters(n)
    out = _blocks(xs, ys, range(1, n + 1)) + z + _OUT
    acc = _zero_data(P.codomain, 2 * n + 1)
    if k <= p:
        pivot = k + q  # the tensor argument X_{k+q} = x (x) y that Q lands next to
        rest = _blocks(xs, ys, range(k + q + 1, n + 1)) + z + _OUT
        for sh in shuffles(k - 1, q):
            head = _blocks(xs, ys, sh.perm[: k - 1])
            inner = _blocks(xs, ys, sh.perm[k - 1:])
            # Q(...) (x) y_{k+q}
            t1 = contract(f"{head}{_MID}{ys[pivot - 1]}{rest},{inner}{xs[pivot - 1]}{_MID}->{out}",
                          P.data, Q.data)
            # x_{k+q} (x) Q(...)
            t2 = contract(f"{head}{xs[pivot - 1]}{_MID}{rest},{inner}{ys[pivot - 1]}{_MID}->{out}",
                          P.data, Q.data)
            acc = acc + (t1 + t2) * sh.sign
    else:
        for sh in shuffles(p, q):
            head = _blocks(xs, ys, sh.perm[:p])
            inner = _blocks(xs, ys, sh.perm[p:])
            term = contract(f"{head}{_MID}{_OUT},{inner}{z}{_MID}->{out}", P.data, Q.data)
            acc = acc + term * sh.sign
    return acc


def c_compose(P: MultiMap, Q: MultiMap) -> MultiMap:
    """P o Q = sum_k (-1)^{(k-1)q} P o_k Q."""
    g = _base_space(P, Q)
    p, q = c_degree(P), c_degree(Q)
    acc = _zero_data(g, 2 * (p + q) + 1)
    for k in range(1, p + 2):
        term = _circ_k_c(P, Q, k)
        acc = acc - term if ((k - 1) * q) % 2 else acc + term
    return cochain(g, acc.ndim - 1, acc)


def c_bracket(P: MultiMap, Q: MultiMap) -> MultiMap:
    """[[P, Q]] = P o Q - (-1)^{pq} Q o P on C*(g, g)."""
    p, q = c_degree(P), c_degree(Q)
    a, b = c_compose(P, Q), c_compose(Q, P)
    return a - b if (p * q) % 2 == 0 else a + b


# the embedding Phi -----------------------------------------------------------------


def phi_embed(f: MultiMap) -> MultiMap:
    """(Phi f)(X_1..X_p, x(x)y) = f(X.., x)(x)y + x(x)f(X.., y) on g(x)g."""
    g = _base_space(f)
    p, d = c_degree(f), g.dim
    w = Space.tensor_square(g)
    eye = identity(d)
    pre = LETTERS[: 2 * p]
    term1 = contract(f"{pre}XA,WB->{pre}XWAB", f.data, eye)
    term2 = contract(f"{pre}WB,XA->{pre}XWAB", f.data, eye)
    data = (term1 + term2).reshape((d * d,) * (p + 2))
    return MultiMap.on(w, p + 1, normalized(data))


def phi_inverse(F: MultiMap, g: Space) -> MultiMap:
    """Recover f from Phi f; raises if F is not in the image of Phi.

    Reads f(X.., e_a)_c off the (c, a) coefficient of F(X.., e_a (x) e_a),
    halving on the diagonal, then checks that re-embedding reproduces F.
    """
    d = g.dim
    if F.codomain != Space.tensor_square(g):
        raise UsageError("map does not live on the tensor square of g")
    _base_space(F)
    p = cl_degree(F)
    arr = F.data.reshape((d,) * (2 * p + 4))
    f = zeros(*((d,) * (2 * p + 1)), d)
    for a in range(d):
        f[..., a, :] = arr[..., a, a, :, a]
        f[..., a, a] = arr[..., a, a, a, a] * Fraction(1, 2)
    out = cochain(g, 2 * p + 1, normalized(f))
    if phi_embed(out) != F:
        raise UsageError("map is not in the image of Phi")
    return out


def c_bracket_via_phi(P: MultiMap, Q: MultiMap) -> MultiMap:
    """Phi^{-1}([Phi P, Phi Q]_B): independent route to [[P, Q]]."""
    g = _base_space(P, Q)
    return phi_inverse(balavoine_bracket(phi_embed(P), phi_embed(Q)), g)


# LTS cochains and Maurer-Cartan ---------------------------------------------------


@dataclass(frozen=True)
class LTSCochainFlag:
    cond1: bool
    cond2: bool

    @property
    def passed(self) -> bool:
        return self.cond1 and self.cond2


def last_three_defects(t: np.ndarray, first: int) -> tuple[np.ndarray, np.ndarray]:
    """Defects of the two constraints on axes ``first, first+1, first+2``.

    Returns (f(.., x, y, z) + f(.., y, x, z), cyclic sum over x, y, z).
    """
    axes = list(range(t.ndim))
    a, b, c = first, first + 1, first + 2
    swap = axes.copy()
    swap[a], swap[b] = b, a
    skew = t + np.transpose(t, swap)
    cyc1 = axes.copy()
    cyc1[a], cyc1[b], cyc1[c] = b, c, a
    cyc2 = axes.copy()
    cyc2[a], cyc2[b], cyc2[c] = c, a, b
    cyclic = t + np.transpose(t, cyc1) + np.transpose(t, cyc2)
    return skew, cyclic


def is_lts_cochain(Q: MultiMap) -> LTSCochainFlag:
    """Membership of Q in the Lie-triple subspace of C*(g, g).

    Degree-0 maps g -> g carry no constraint and are members.
    """
    p = c_degree(Q)
    if p == 0:
        return LTSCochainFlag(True, True)
    skew, cyclic = last_three_defects(Q.data, Q.arity - 3)
    return LTSCochainFlag(not np.any(skew != 0), not np.any(cyclic != 0))


def structure_cochain(a: Algebra) -> MultiMap:
    _require(a, NAMBU, LTS)
    return a.structure


def mc_defect(a: Algebra) -> MultiMap:
    """[[pi, pi]]; zero exactly when pi satisfies the fundamental identity."""
    pi = structure_cochain(a)
    return c_bracket(pi, pi)
