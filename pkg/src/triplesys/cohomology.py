"""Cochains of a Lie triple system with coefficients in a representation.

An ``n``-cochain is a map ``g^{(x) 2n-1} -> V`` whose last three slots are
antisymmetric in the first two and have vanishing cyclic sum.  These
constraints touch only the last three slots, so

    C^n = (g*)^{(x) 2n-4} (x) K (x) V,

with ``K`` the space of trilinear forms obeying them.  A cochain basis is
the product of elementary maps on the prefix, the reduced-echelon kernel
basis of ``K`` and the standard basis of ``V``; coordinates are read off at
the free positions of ``K``.

Coboundaries are computed on whole batches of cochains at once: arrays
carry a leading batch axis and every term of the coboundary is one
``einsum``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebras import LTS, Algebra, CheckReport, Rep, adjoint_rep, check_representation
from .controlling import c_bracket, last_three_defects
from .errors import ConsistencyError, PreconditionError, UsageError
from .exactlin import as_int64, identity, max_abs, kernel_basis, matmul, normalized, rank, zeros
from .multilinear import LETTERS, MultiMap

# batch, value, contracted
_B, _O, _P = "B", "O", "P"


def cochain_degree(f: MultiMap) -> int:
    if f.arity % 2 == 0:
        raise UsageError(f"arity {f.arity} is not of the form 2n-1")
    return (f.arity + 1) // 2


@lru_cache(maxsize=None)
def _k_basis(d: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Kernel basis of the trilinear-form constraints (rows) and free positions."""
    n = d ** 3
    forms = identity(n).reshape((n, d, d, d))
    skew, cyclic = last_three_defects(forms, 1)
    a = np.concatenate([skew.reshape(n, -1), cyclic.reshape(n, -1)], axis=1).T
    basis = kernel_basis(a)
    k = np.array(basis, dtype=object).reshape(len(basis), n) if basis else zeros(0, n)
    free = tuple(_free_position(row, k) for row in k)
    return k, free


def _free_position(row, k) -> int:
    # the free column of a kernel vector is the one where every other basis
    # vector vanishes and this one equals 1
    for i in np.flatnonzero(row == 1):
        if np.count_nonzero(k[:, i]) == 1:
            return int(i)
    raise ConsistencyError("kernel basis is not in free-column form")


class CochainBasis:
    """Basis of C^n_LTS(g; V) with a coordinate map.

    With ``shuffle = (perm, scale)`` basis vector ``j`` is ``scale[j]`` times
    standard basis vector ``perm[j]``; this is how the basis-independence of
    cohomology is tested.
    """

    def __init__(self, lts: Algebra, rep: Rep, n: int, shuffle=None):
        if n < 1:
            raise UsageError("cochain degree must be >= 1")
        self.lts, self.rep, self.degree = lts, rep, n
        self.d, self.m = lts.dim, rep.space.dim
        self.arity = 2 * n - 1
        if n == 1:
            self.prefix, self.k, self.free = 1, None, None
            self.std_dim = self.d * self.m
        else:
            self.prefix = self.d ** (2 * n - 4)
            self.k, self.free = _k_basis(self.d)
            self.std_dim = self.prefix * len(self.free) * self.m
        self.shuffle = None
        if shuffle is not None:
            perm, scale = list(shuffle[0]), np.array(shuffle[1], dtype=object)
            if sorted(perm) != list(range(self.std_dim)) or len(scale) != self.std_dim \
                    or np.any(scale == 0):
                raise UsageError("shuffle must be a permutation with nonzero scalings")
            self.shuffle = (perm, scale)

    def __len__(self):
        return self.std_dim

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.d,) * self.arity + (self.m,)

    def _std_coordinates(self, arr: np.ndarray) -> np.ndarray:
        b = arr.shape[0]
        if self.degree == 1:
            return arr.reshape(b, -1)
        arr = arr.reshape(b, self.prefix, self.d ** 3, self.m)
        return arr[:, :, list(self.free), :].reshape(b, -1)

    def _std_elements(self, coords: np.ndarray) -> np.ndarray:
        b = coords.shape[0]
        if self.degree == 1:
            return coords.reshape((b,) + self.shape)
        c = coords.reshape(b, self.prefix, len(self.free), self.m)
        out = np.einsum("bprm,rk->bpkm", c, self.k)
        return out.reshape((b,) + self.shape)

    def coordinates(self, arr: np.ndarray, check: bool = True) -> np.ndarray:
        """Coordinates of a batch of cochain arrays (shape (B, d.., m)) -> (B, dim).

        With ``check`` raise ConsistencyError for a batch member outside C^n.
        """
        arr = np.asarray(arr, dtype=object)
        c = self._std_coordinates(arr)
        if check and self.degree > 1:
            back = self._std_elements(c)
            bad = np.flatnonzero((back != arr).reshape(arr.shape[0], -1).any(axis=1))
            if bad.size:
                raise ConsistencyError(
                    f"batch member {int(bad[0])} violates the degree-{self.degree} cochain constraints")
        if self.shuffle is not None:
            perm, scale = self.shuffle
            c = c[:, perm] * np.array([Fraction(1) / Fraction(x) for x in scale], dtype=object)
        return normalized(c)

    def elements(self, coords=None) -> np.ndarray:
        """Cochain arrays for a batch of coordinate rows (default: the basis)."""
        if coords is None:
            coords = identity(self.std_dim)
        if self.std_dim == 0:
            return zeros(0, *self.shape)
        coords = np.asarray(coords, dtype=object).reshape(-1, self.std_dim)
        if self.shuffle is not None:
            perm, scale = self.shuffle
            std = zeros(*coords.shape)
            std[:, perm] = coords * scale
            coords = std
        return normalized(self._std_elements(coords))

    def element(self, coords) -> MultiMap:
        if self.std_dim == 0:
            return self._as_map(zeros(*self.shape))
        return self._as_map(self.elements(coords)[0])

    def __getitem__(self, i: int) -> MultiMap:
        if not 0 <= i < len(self):
            raise IndexError(i)
        e = zeros(self.std_dim)
        e[i] = 1
        return self.element(e)

    def _as_map(self, arr) -> MultiMap:
        return MultiMap.on(self.lts.space, self.arity, arr, self.rep.space)

    def contains(self, f: MultiMap) -> bool:
        try:
            self.coordinates(f.data[None], check=True)
        except ConsistencyError:
            return False
        return True


def random_shuffle(dim: int, seed: int) -> tuple[list[int], list]:
    """A random permutation with random nonzero integer scalings."""
    rng = random.Random(seed)
    perm = list(range(dim))
    rng.shuffle(perm)
    scale = [rng.choice([1, -1, 2, -2, 3]) for _ in perm]
    return perm, scale


def cochain_basis(lts: Algebra, rep: Rep, n: int, shuffle_seed: int | None = None) -> CochainBasis:
    _check_pair(lts, rep)
    basis = CochainBasis(lts, rep, n)
    if shuffle_seed is not None:
        basis = CochainBasis(lts, rep, n, random_shuffle(len(basis), shuffle_seed))
    return basis


def _check_pair(lts: Algebra, rep: Rep):
    if lts.kind != LTS:
        raise UsageError("cochains are defined over Lie triple systems")
    if rep.base.space != lts.space or rep.base.structure != lts.structure:
        raise UsageError("representation is over a different algebra")


# the coboundary ----------------------------------------------------------------


def coboundary_data(lts: Algebra, rep: Rep, arr: np.ndarray) -> np.ndarray:
    """delta on a batch of n-cochain arrays (B, d^(2n-1), m) -> (B, d^(2n+1), m)."""
    arr = np.asarray(arr, dtype=object)
    nargs = arr.ndim - 2
    if nargs % 2 == 0 or nargs < 1:
        raise UsageError("cochain arrays need 2n-1 argument axes")
    n = (nargs + 1) // 2
    pi = lts.data
    R = rep.matrices
    D = np.einsum("yxij->xyij", R) - R  # rho(y, x) - rho(x, y)
    xs = LETTERS[0:2 * n:2]
    ys = LETTERS[1:2 * n:2]
    z = LETTERS[2 * n]
    out = _B + "".join(x + y for x, y in zip(xs, ys)) + z + _O
    shape = (arr.shape[0],) + (lts.dim,) * (2 * n + 1) + (rep.space.dim,)

    # exact int64 fast path when no intermediate sum can reach 2**62
    fast = [as_int64(a) for a in (arr, pi, R, D)]
    if all(a is not None for a in fast):
        nterms = n * (n + 1) + 2 * n + 2
        width = max(lts.dim, rep.space.dim, 1)
        bound = max_abs(fast[0]) * max(max_abs(a) for a in fast[1:]) * width * nterms
        if bound < 2 ** 62:
            arr, pi, R, D = fast
    acc = np.zeros(shape, dtype=arr.dtype)
    if acc.dtype == object:
        acc.fill(0)

    def blocks(skip=None, replace=None):
        s = ""
        for i in range(n):
            if i == skip:
                continue
            s += replace[1] if replace and replace[0] == i else xs[i] + ys[i]
        return s

    def add(sign, sub_f, other_sub, other):
        nonlocal acc
        term = np.einsum(f"{sub_f},{other_sub}->{out}", arr, other, optimize=False)
        acc = acc + term if sign > 0 else acc - term

    for j in range(n):
        sj = -1 if (j + 1) % 2 else 1  # (-1)^j with 1-based j
        for k in range(j + 1, n):
            add(sj, _B + blocks(j, (k, _P + ys[k])) + z + _O, xs[j] + ys[j] + xs[k] + _P, pi)
            add(sj, _B + blocks(j, (k, xs[k] + _P)) + z + _O, xs[j] + ys[j] + ys[k] + _P, pi)
        add(sj, _B + blocks(j) + _P + _O, xs[j] + ys[j] + z + _P, pi)
        add(-sj, _B + blocks(j) + z + _P, xs[j] + ys[j] + _O + _P, D)
    s4 = 1 if (n + 1) % 2 == 0 else -1
    head = blocks(n - 1)
    add(s4, _B + head + xs[n - 1] + _P, ys[n - 1] + z + _O + _P, R)
    add(-s4, _B + head + ys[n - 1] + _P, xs[n - 1] + z + _O + _P, R)
    if acc.dtype != object:
        return acc.astype(object)
    return normalized(acc)


def coboundary(lts: Algebra, rep: Rep, f: MultiMap) -> MultiMap:
    _check_pair(lts, rep)
    if f.codomain != rep.space or any(s != lts.space for s in f.domain):
        raise UsageError("cochain does not map g^(2n-1) -> V")
    n = cochain_degree(f)
    data = coboundary_data(lts, rep, f.data[None])[0]
    return MultiMap.on(lts.space, 2 * n + 1, data, rep.space)


def coboundary_matrix(lts: Algebra, rep: Rep, n: int, src: CochainBasis | None = None,
                      dst: CochainBasis | None = None) -> np.ndarray:
    """Matrix of delta: C^n -> C^{n+1} (columns = images of the source basis).

    Raises ConsistencyError when some coboundary leaves C^{n+1}.
    """
    _check_pair(lts, rep)
    src = src or CochainBasis(lts, rep, n)
    dst = dst or CochainBasis(lts, rep, n + 1)
    if len(src) == 0:
        return zeros(len(dst), 0)
    images = coboundary_data(lts, rep, src.elements())
    return dst.coordinates(images, check=True).T.copy()


def coboundary_matrices(lts: Algebra, rep: Rep, max_n: int,
                        shuffle_seed: int | None = None) -> tuple[list[CochainBasis], list[np.ndarray]]:
    """Bases of C^1..C^{max_n+1} and the matrices of delta_1..delta_{max_n}."""
    bases = [cochain_basis(lts, rep, n, None if shuffle_seed is None else shuffle_seed + n)
             for n in range(1, max_n + 2)]
    mats = [coboundary_matrix(lts, rep, n, bases[n - 1], bases[n]) for n in range(1, max_n + 1)]
    return bases, mats


def cohomology_table(lts: Algebra, rep: Rep, max_n: int, shuffle_seed: int | None = None,
                     check_rep: bool = True) -> list[dict]:
    """Rows {n, dim_c, rank, dim_h} for 1 <= n <= max_n."""
    if max_n < 1:
        raise UsageError("maximal degree must be >= 1")
    _check_pair(lts, rep)
    if check_rep and not check_representation(rep).passed:
        raise PreconditionError("coefficients fail the representation identities")
    bases, mats = coboundary_matrices(lts, rep, max_n, shuffle_seed)
    return table_from_matrices(bases, mats)


def table_from_matrices(bases, mats) -> list[dict]:
    ranks = [0] + [rank(m) for m in mats]
    rows = []
    for n in range(1, len(mats) + 1):
        dim = len(bases[n - 1])
        rows.append({"n": n, "dim_c": dim, "rank": ranks[n],
                     "dim_h": dim - ranks[n] - ranks[n - 1]})
    return rows


def cohomology_dims(lts: Algebra, rep: Rep, max_n: int, shuffle_seed: int | None = None) -> list[int]:
    return [row["dim_h"] for row in cohomology_table(lts, rep, max_n, shuffle_seed)]


def is_cocycle(lts: Algebra, rep: Rep, f: MultiMap) -> bool:
    return coboundary(lts, rep, f).is_zero()


def delta_squared(lts: Algebra, rep: Rep, n: int) -> np.ndarray:
    """delta_{n+1} delta_n as a matrix in the standard cochain bases."""
    return matmul(coboundary_matrix(lts, rep, n + 1), coboundary_matrix(lts, rep, n))


def oracle_delta_vs_bracket(lts: Algebra, n: int) -> CheckReport:
    """Compare delta f with (-1)^{n-1} [[pi, f]] on every basis cochain of C^n(g; g)."""
    if lts.kind != LTS:
        raise UsageError("the oracle needs a Lie triple system")
    rep = adjoint_rep(lts)
    basis = CochainBasis(lts, rep, n)
    elems = basis.elements()
    deltas = coboundary_data(lts, rep, elems)
    pi = lts.structure
    g = lts.space
    report = CheckReport()
    report.identities.append("oracle")
    sign = 1 if (n - 1) % 2 == 0 else -1
    for i in range(len(basis)):
        f = MultiMap.on(g, 2 * n - 1, elems[i])
        br = c_bracket(pi, f).data * sign
        sub = CheckReport().compare("oracle", deltas[i], br, (g,) * (2 * n + 1))
        for v in sub.violations:
            report.violations.append(v)
    return report
