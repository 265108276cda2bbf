"""2-term homotopy Lie triple systems and their coherence conditions (a)-(l).

Only the bracket signatures with at most one degree -1 argument are stored;
the others land in degree <= -2 and vanish.  Arrays follow the usual
layout (argument axes, then the value axis):

* ``b000`` [x, y, z]  shape (n0, n0, n0, n0)
* ``b001`` [x, y, f]  shape (n0, n0, n1, n1)
* ``b010`` [x, f, y]  shape (n0, n1, n0, n1)
* ``b100`` [f, x, y]  shape (n1, n0, n0, n1)
* ``j``    J(x1..x5)  shape (n0,)*5 + (n1,)
* ``d``    matrix (n0, n1): column ``f`` is d(e_f)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..algebras import LTS, Algebra, CheckReport
from ..controlling import last_three_defects
from ..errors import UsageError
from ..exactlin import as_matrix, zeros
from ..multilinear import MultiMap, Space
from ..multilinear import contract as C


@dataclass(frozen=True, eq=False)
class TwoTermSystem:
    t0: Space
    t1: Space
    d: np.ndarray
    b000: MultiMap
    b001: MultiMap
    b010: MultiMap
    b100: MultiMap
    j: MultiMap

    def __post_init__(self):
        t0, t1 = self.t0, self.t1
        d = as_matrix(self.d, (t0.dim, t1.dim)) if np.size(self.d) else zeros(t0.dim, t1.dim)
        d.flags.writeable = False
        object.__setattr__(self, "d", d)
        expect = {
            "b000": ((t0, t0, t0), t0),
            "b001": ((t0, t0, t1), t1),
            "b010": ((t0, t1, t0), t1),
            "b100": ((t1, t0, t0), t1),
            "j": ((t0,) * 5, t0 if False else t1),
        }
        for name, (dom, cod) in expect.items():
            m = getattr(self, name)
            if tuple(m.domain) != dom or m.codomain != cod:
                raise UsageError(f"{name} has the wrong domain or codomain")

    @classmethod
    def build(cls, t0: Space, t1: Space, d=None, b000=None, b001=None, b010=None,
              b100=None, j=None) -> "TwoTermSystem":
        """Assemble from raw arrays; omitted pieces are zero."""
        def mm(dom, cod, data):
            return MultiMap(dom, cod, data)
        return cls(
            t0, t1,
            zeros(t0.dim, t1.dim) if d is None else as_matrix(d, (t0.dim, t1.dim)),
            mm((t0, t0, t0), t0, b000),
            mm((t0, t0, t1), t1, b001),
            mm((t0, t1, t0), t1, b010),
            mm((t1, t0, t0), t1, b100),
            mm((t0,) * 5, t1, j),
        )

    @classmethod
    def from_lts(cls, a: Algebra) -> "TwoTermSystem":
        """The degenerate system with T_0 = g and T_{-1} = 0."""
        return cls.build(a.space, Space(()), b000=a.data)

    @property
    def n0(self) -> int:
        return self.t0.dim

    @property
    def n1(self) -> int:
        return self.t1.dim

    def arrays(self):
        return (self.d, self.b000.data, self.b001.data, self.b010.data,
                self.b100.data, self.j.data)

    def replace(self, **changes) -> "TwoTermSystem":
        parts = {"d": self.d, "b000": self.b000.data, "b001": self.b001.data,
                 "b010": self.b010.data, "b100": self.b100.data, "j": self.j.data}
        parts.update(changes)
        return TwoTermSystem.build(self.t0, self.t1, **parts)

    def is_skeletal(self) -> bool:
        return not np.any(self.d != 0)

    def is_strict(self) -> bool:
        return self.j.is_zero()

    def base_lts(self) -> Algebra:
        return Algebra(LTS, self.t0, self.b000)

    def __eq__(self, other):
        if not isinstance(other, TwoTermSystem):
            return NotImplemented
        return (self.t0 == other.t0 and self.t1 == other.t1
                and not np.any(self.d != other.d)
                and all(getattr(self, k) == getattr(other, k)
                        for k in ("b000", "b001", "b010", "b100", "j")))

    __hash__ = None


def fi_rhs(T):
    """[[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]] on T_0."""
    return (C("abcp,pdeo->abcdeo", T, T)
            + C("abdp,cpeo->abcdeo", T, T)
            + C("abep,cdpo->abcdeo", T, T))


def fi_lhs(T):
    """[x1, x2, [x3, x4, x5]]."""
    return C("cdep,abpo->abcdeo", T, T)


def check_two_term(sys: TwoTermSystem) -> CheckReport:
    """Conditions (a)-(l) on all basis tuples."""
    D, T, A, B, Cm, J = sys.arrays()
    s0, s1 = sys.t0, sys.t1
    r = CheckReport()

    # (a) d[x,y,f] = [x,y,df];  d[x,f,y] = [x,df,y]
    r.compare("a", C("xyfp,ap->xyfa", A, D), C("pf,xypa->xyfa", D, T), (s0, s0, s1))
    r.compare("a", C("xfyp,ap->xfya", B, D), C("pf,xpya->xfya", D, T), (s0, s1, s0))
    # (b) [df,g,x] = [f,dg,x];  [df,x,g] = [f,x,dg]
    r.compare("b", C("pf,pgxo->fgxo", D, B), C("qg,fqxo->fgxo", D, Cm), (s1, s1, s0))
    r.compare("b", C("pf,pxgo->fxgo", D, A), C("qg,fxqo->fxgo", D, Cm), (s1, s0, s1))
    # (c) antisymmetry
    r.compare("c", T, -C("yxzo->xyzo", T), (s0, s0, s0))
    r.compare("c", A, -C("yxfo->xyfo", A), (s0, s0, s1))
    r.compare("c", B, -C("fxyo->xfyo", Cm), (s0, s1, s0))
    # (d) cyclic on T_0
    r.compare("d", T + C("yzxo->xyzo", T) + C("zxyo->xyzo", T), zeros(*T.shape), (s0,) * 3)
    # (e) [x,y,f] + [y,f,x] + [f,x,y] = 0
    r.compare("e", A + C("yfxo->xyfo", B) + C("fxyo->xyfo", Cm), zeros(*A.shape), (s0, s0, s1))
    # (f), (g) on the last three slots of J
    skew, cyc = last_three_defects(J, 2)
    r.compare("f", skew, zeros(*J.shape), (s0,) * 5)
    r.compare("g", cyc, zeros(*J.shape), (s0,) * 5)
    # (h) dJ = -[x1,x2,[x3,x4,x5]] + (the three rebracketed terms)
    r.compare("h", C("abcdep,op->abcdeo", J, D), fi_rhs(T) - fi_lhs(T), (s0,) * 5)
    # (i) J(df,x2,..) = -[f,x2,[x3,x4,x5]] + [x3,[f,x2,x4],x5] + [[f,x2,x3],x4,x5] + [x3,x4,[f,x2,x5]]
    lhs = C("pf,pbcdeo->fbcdeo", D, J)
    rhs = (-C("cdep,fbpo->fbcdeo", T, Cm)
           + C("fbdp,cpeo->fbcdeo", Cm, B)
           + C("fbcp,pdeo->fbcdeo", Cm, Cm)
           + C("fbep,cdpo->fbcdeo", Cm, A))
    r.compare("i", lhs, rhs, (s1, s0, s0, s0, s0))
    # (j) J(x1,x2,df,x4,x5) = -[x1,x2,[f,x4,x5]] + [f,[x1,x2,x4],x5] + [[x1,x2,f],x4,x5] + [f,x4,[x1,x2,x5]]
    lhs = C("pf,abpdeo->abfdeo", D, J)
    rhs = (-C("fdep,abpo->abfdeo", Cm, A)
           + C("abdp,fpeo->abfdeo", T, Cm)
           + C("abfp,pdeo->abfdeo", A, Cm)
           + C("abep,fdpo->abfdeo", T, Cm))
    r.compare("j", lhs, rhs, (s0, s0, s1, s0, s0))
    # (k) J(x1,..,x4,df) = -[x1,x2,[x3,x4,f]] + [x3,[x1,x2,x4],f] + [[x1,x2,x3],x4,f] + [x3,x4,[x1,x2,f]]
    lhs = C("pf,abcdpo->abcdfo", D, J)
    rhs = (-C("cdfp,abpo->abcdfo", A, A)
           + C("abdp,cpfo->abcdfo", T, A)
           + C("abcp,pdfo->abcdfo", T, A)
           + C("abfp,cdpo->abcdfo", A, A))
    r.compare("k", lhs, rhs, (s0, s0, s0, s0, s1))
    # (l) coherence of J, seven terms on each side
    lhs = (C("abcdep,pfgo->abcdefgo", J, Cm)
           + C("abcdfp,epgo->abcdefgo", J, B)
           + C("cdefgp,abpo->abcdefgo", J, A)
           + C("abcdgp,efpo->abcdefgo", J, A)
           + C("cdeq,abqfgo->abcdefgo", T, J)
           + C("cdfq,abeqgo->abcdefgo", T, J)
           + C("cdgq,abefqo->abcdefgo", T, J))
    rhs = (C("abefgp,cdpo->abcdefgo", J, A)
           + C("abcq,qdefgo->abcdefgo", T, J)
           + C("abdq,cqefgo->abcdefgo", T, J)
           + C("abeq,cdqfgo->abcdefgo", T, J)
           + C("abfq,cdeqgo->abcdefgo", T, J)
           + C("efgq,abcdqo->abcdefgo", T, J)
           + C("abgq,cdefqo->abcdefgo", T, J))
    r.compare("l", lhs, rhs, (s0,) * 7)
    return r


CONDITIONS = tuple("abcdefghijkl")
