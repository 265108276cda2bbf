"""Leibniz, Lie, Nambu algebras, Lie triple systems and their representations.

Every checker evaluates its identities on all basis tuples at once (the
structure tensors are contracted with ``einsum``) and reports every
violating tuple, not only the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, UsageError
from .exactlin import identity, inverse
from .multilinear import MultiMap, Space, contract

LEIBNIZ, LIE, NAMBU, LTS = "leibniz", "lie", "nambu", "lts"
ARITY = {LEIBNIZ: 2, LIE: 2, NAMBU: 3, LTS: 3}


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple[int, ...]
    lhs: tuple
    rhs: tuple
    witness_labels: tuple[str, ...] = ()

    def describe(self) -> str:
        args = ", ".join(self.witness_labels or map(str, self.witness))
        return f"{self.identity} fails at ({args}): lhs={list(self.lhs)} rhs={list(self.rhs)}"


@dataclass
class CheckReport:
    identities: list[str] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed(self, name: str) -> list[Violation]:
        return [v for v in self.violations if v.identity == name]

    def ok(self, name: str) -> bool:
        return not self.failed(name)

    def compare(self, name: str, lhs, rhs, slots=None):
        """Record identity ``name``: ``lhs == rhs`` entrywise.

        ``lhs``/``rhs`` carry one axis per argument followed by value axes;
        ``slots`` gives the Space of each argument axis (for labels).
        """
        if name not in self.identities:
            self.identities.append(name)
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise UsageError(f"{name}: shapes differ {lhs.shape} vs {rhs.shape}")
        nargs = len(slots) if slots is not None else lhs.ndim - 1
        diff = lhs != rhs
        if diff.ndim > nargs:
            diff = diff.reshape(diff.shape[:nargs] + (int(np.prod(diff.shape[nargs:])),)).any(axis=-1)
        for idx in np.argwhere(diff):
            idx = tuple(int(i) for i in idx)
            labels = tuple(s.labels[i] for s, i in zip(slots, idx)) if slots else ()
            self.violations.append(Violation(
                name, idx, tuple(np.ravel(lhs[idx])), tuple(np.ravel(rhs[idx])), labels))
        return self

    def merge(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for name in other.identities:
            if prefix + name not in self.identities:
                self.identities.append(prefix + name)
        for v in other.violations:
            self.violations.append(Violation(prefix + v.identity, v.witness, v.lhs, v.rhs,
                                             v.witness_labels))
        return self


@dataclass(frozen=True, eq=True)
class Algebra:
    kind: str
    space: Space
    structure: MultiMap

    def __post_init__(self):
        if self.kind not in ARITY:
            raise UsageError(f"unknown algebra kind {self.kind!r}")
        s = self.structure
        if s.arity != ARITY[self.kind]:
            raise UsageError(f"{self.kind} needs arity {ARITY[self.kind]}, got {s.arity}")
        if any(d != self.space for d in s.domain) or s.codomain != self.space:
            raise UsageError("structure map must live on the algebra's space")

    @classmethod
    def from_table(cls, kind: str, space: Space, table: dict) -> "Algebra":
        return cls(kind, space, MultiMap.from_table((space,) * ARITY[kind], space, table))

    @classmethod
    def zero(cls, kind: str, space: Space) -> "Algebra":
        return cls(kind, space, MultiMap.on(space, ARITY[kind]))

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def data(self) -> np.ndarray:
        return self.structure.data

    def bracket(self, *args) -> np.ndarray:
        return self.structure.eval(*args)

    def as_kind(self, kind: str) -> "Algebra":
        return Algebra(kind, self.space, self.structure)

    def transformed(self, a) -> "Algebra":
        """Structure constants in the basis given by the columns of ``a``."""
        a = np.asarray(a, dtype=object)
        ainv = inverse(a)
        t = self.data
        if self.structure.arity == 2:
            t = contract("xyp,xa,yb,cp->abc", t, a, a, ainv)
        else:
            t = contract("xyzp,xa,yb,zc,dp->abcd", t, a, a, a, ainv)
        return Algebra(self.kind, self.space, self.structure.with_data(t))


@dataclass(frozen=True, eq=True)
class Rep:
    base: Algebra
    space: Space
    rho: MultiMap  # (g, g) -> End(V), matrices flattened row-major

    def __post_init__(self):
        g, m = self.base.space, self.space.dim
        if self.rho.domain != (g, g) or self.rho.codomain.dim != m * m:
            raise UsageError("rho must map g x g to dim(V) x dim(V) matrices")

    @staticmethod
    def end_space(v: Space) -> Space:
        return Space(tuple(f"{a}->{b}" for b in v.labels for a in v.labels))

    @classmethod
    def from_matrices(cls, base: Algebra, space: Space, matrices) -> "Rep":
        """``matrices[x, y]`` is the dim(V) x dim(V) matrix of rho(e_x, e_y)."""
        d, m = base.dim, space.dim
        arr = np.asarray(matrices, dtype=object).reshape(d, d, m * m)
        return cls(base, space, MultiMap((base.space,) * 2, cls.end_space(space), arr))

    @classmethod
    def zero(cls, base: Algebra, space: Space) -> "Rep":
        return cls(base, space, MultiMap((base.space,) * 2, cls.end_space(space)))

    @property
    def matrices(self) -> np.ndarray:
        """Array of shape (d, d, m, m): ``matrices[x, y] @ v = rho(x, y) v``."""
        d, m = self.base.dim, self.space.dim
        return self.rho.data.reshape(d, d, m, m)

    def matrix(self, x: int, y: int) -> np.ndarray:
        return self.matrices[x, y]


def _require(a: Algebra, *kinds: str):
    if a.kind not in kinds:
        raise UsageError(f"expected algebra of kind {' or '.join(kinds)}, got {a.kind}")


def _fundamental_identity(t):
    lhs = contract("zwup,xypo->xyzwuo", t, t)
    rhs = (contract("xyzp,pwuo->xyzwuo", t, t)
           + contract("xywp,zpuo->xyzwuo", t, t)
           + contract("xyup,zwpo->xyzwuo", t, t))
    return lhs, rhs


def check_leibniz(a: Algebra) -> CheckReport:
    _require(a, LEIBNIZ, LIE)
    b, g = a.data, a.space
    lhs = contract("yzp,xpo->xyzo", b, b)
    rhs = contract("xyp,pzo->xyzo", b, b) + contract("xzp,ypo->xyzo", b, b)
    return CheckReport().compare("leibniz", lhs, rhs, (g,) * 3)


def check_lie(a: Algebra) -> CheckReport:
    _require(a, LIE, LEIBNIZ)
    b, g = a.data, a.space
    report = CheckReport().compare("antisymmetry", b, -contract("yxo->xyo", b), (g,) * 2)
    return report.merge(check_leibniz(a))


def check_nambu(a: Algebra) -> CheckReport:
    _require(a, NAMBU, LTS)
    lhs, rhs = _fundamental_identity(a.data)
    return CheckReport().compare("fundamental", lhs, rhs, (a.space,) * 5)


def check_lts(a: Algebra) -> CheckReport:
    _require(a, LTS)
    t, g = a.data, a.space
    report = CheckReport()
    report.compare("lts1", t, -contract("yxzo->xyzo", t), (g,) * 3)
    diag = np.stack([t[i, i] for i in range(g.dim)]) if g.dim else t[:, 0]
    report.compare("lts1", diag, np.zeros_like(diag), (g, g))
    cyclic = t + contract("yzxo->xyzo", t) + contract("zxyo->xyzo", t)
    report.compare("lts2", cyclic, np.zeros_like(cyclic), (g,) * 3)
    lhs, rhs = _fundamental_identity(t)
    report.compare("lts3", lhs, rhs, (g,) * 5)
    return report


def check_representation(r: Rep) -> CheckReport:
    if r.base.kind != LTS:
        raise UsageError("representations are defined over Lie triple systems")
    if not check_lts(r.base).passed:
        raise PreconditionError("base algebra is not a Lie triple system")
    t, g = r.base.data, r.base.space
    R = r.matrices
    D = contract("baij->abij", R) - R  # rho(x2, x1) - rho(x1, x2)
    report = CheckReport()
    lhs = contract("abij,cdjk->abcdik", D, R) - contract("cdij,abjk->abcdik", R, D)
    rhs = contract("abcp,pdik->abcdik", t, R) + contract("abdp,cpik->abcdik", t, R)
    report.compare("rep1", lhs, rhs, (g,) * 4)
    lhs = contract("bcep,apik->abceik", t, R)
    rhs = (contract("ceij,abjk->abceik", R, R)
           - contract("beij,acjk->abceik", R, R)
           + contract("cbij,aejk->abceik", R, R)
           - contract("bcij,aejk->abceik", R, R))
    report.compare("rep2", lhs, rhs, (g,) * 4)
    return report


def adjoint_rep(a: Algebra) -> Rep:
    """ad(x, y) z = [z, x, y]."""
    _require(a, LTS)
    return Rep.from_matrices(a, a.space, contract("jxyi->xyij", a.data))


def induced_leibniz(a: Algebra) -> Algebra:
    """[x(x)y, z(x)w] = [x,y,z](x)w + z(x)[x,y,w] on the tensor square."""
    _require(a, NAMBU, LTS)
    t, d = a.data, a.dim
    eye = identity(d)
    b = contract("xyzp,wq->xyzwpq", t, eye) + contract("zp,xywq->xyzwpq", eye, t)
    w = Space.tensor_square(a.space)
    return Algebra(LEIBNIZ, w, MultiMap.on(w, 2, b.reshape(d * d, d * d, d * d)))


def lts_from_lie(lie: Algebra) -> Algebra:
    """[x, y, z] := [[x, y], z]."""
    _require(lie, LIE)
    if not check_lie(lie).passed:
        raise PreconditionError("input bracket is not a Lie algebra")
    b = lie.data
    return Algebra(LTS, lie.space, MultiMap.on(lie.space, 3, contract("xyp,pzo->xyzo", b, b)))


def lie_rep_to_lts_rep(lts: Algebra, sigma) -> Rep:
    """rho(x, y) = sigma(y) sigma(x) for a Lie representation ``sigma``.

    ``sigma`` has shape (d, m, m); ``lts`` must be ``lts_from_lie`` of the Lie
    algebra that ``sigma`` represents.
    """
    sigma = np.asarray(sigma, dtype=object)
    m = sigma.shape[1]
    return Rep.from_matrices(lts, Space.standard(m, "v"), contract("yij,xjk->xyik", sigma, sigma))
