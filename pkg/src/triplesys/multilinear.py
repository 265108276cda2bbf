"""Basis-indexed spaces, multilinear maps and signed shuffles.

A :class:`MultiMap` ``U_1 x ... x U_k -> W`` keeps its structure constants
in a dense object array of shape ``(dim U_1, ..., dim U_k, dim W)``; the
last axis holds the coefficient vector of the value.  ``table`` gives the
sparse view (basis tuple -> coefficient vector, zero tuples omitted).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import UsageError
from .exactlin import as_array, format_rat, normalized, rat, zeros


@dataclass(frozen=True)
class Space:
    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(set(labels)) != len(labels):
            raise UsageError(f"duplicate basis labels in {labels}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def standard(cls, n: int, prefix: str = "e") -> "Space":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))

    @classmethod
    def tensor_square(cls, g: "Space") -> "Space":
        """g (x) g with the lexicographic pair basis: (a, b) -> a*dim + b."""
        return cls(tuple(f"{a}⊗{b}" for a in g.labels for b in g.labels))

    @classmethod
    def direct_sum(cls, a: "Space", b: "Space") -> "Space":
        return cls(a.labels + b.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def vector(self, coeffs: dict | None = None) -> np.ndarray:
        """Coefficient vector from ``{label or index: rational}``."""
        v = zeros(self.dim)
        for key, c in (coeffs or {}).items():
            i = key if isinstance(key, int) else self.index(key)
            v[i] = rat(c)
        return v

    def basis_vector(self, i: int) -> np.ndarray:
        v = zeros(self.dim)
        v[i] = 1
        return v

    def describe(self, v) -> str:
        terms = [f"{format_rat(c)}*{lab}" for lab, c in zip(self.labels, v) if c != 0]
        return " + ".join(terms) if terms else "0"


class MultiMap:
    """A multilinear map stored by structure constants."""

    __slots__ = ("domain", "codomain", "data")

    def __init__(self, domain: Sequence[Space], codomain: Space, data=None):
        domain = tuple(domain)
        if not domain:
            raise UsageError("a MultiMap needs arity >= 1")
        shape = tuple(s.dim for s in domain) + (codomain.dim,)
        if data is None:
            arr = zeros(*shape)
        else:
            arr = np.array(data, dtype=object)
            if arr.shape != shape:
                raise UsageError(f"structure array has shape {arr.shape}, expected {shape}")
            arr = normalized(arr)
        arr.flags.writeable = False
        self.domain = domain
        self.codomain = codomain
        self.data = arr

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, domain, codomain) -> "MultiMap":
        return cls(domain, codomain)

    @classmethod
    def from_table(cls, domain, codomain: Space, table: dict) -> "MultiMap":
        """Build from ``{basis tuple: vector}``; vectors may be dicts by label."""
        domain = tuple(domain)
        arr = zeros(*(s.dim for s in domain), codomain.dim)
        for key, value in table.items():
            key = tuple(key)
            if len(key) != len(domain):
                raise UsageError(f"key {key} has arity {len(key)}, expected {len(domain)}")
            for k, s in zip(key, domain):
                if not 0 <= k < s.dim:
                    raise UsageError(f"index {k} out of range in key {key}")
            if isinstance(value, dict):
                vec = codomain.vector(value)
            else:
                vec = as_array(value)
            arr[key] = arr[key] + vec
        return cls(domain, codomain, arr)

    @classmethod
    def on(cls, space: Space, arity: int, data=None, codomain: Space | None = None) -> "MultiMap":
        return cls((space,) * arity, codomain or space, data)

    # views ----------------------------------------------------------------

    @property
    def arity(self) -> int:
        return len(self.domain)

    @property
    def table(self) -> dict[tuple[int, ...], tuple]:
        out = {}
        for idx in itertools.product(*(range(s.dim) for s in self.domain)):
            vec = self.data[idx]
            if np.any(vec != 0):
                out[idx] = tuple(vec)
        return out

    def value(self, *idx: int) -> np.ndarray:
        return self.data[tuple(idx)]

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def eval(self, *args) -> np.ndarray:
        """Evaluate on coefficient vectors, one per slot."""
        if len(args) != self.arity:
            raise UsageError(f"expected {self.arity} arguments, got {len(args)}")
        out = self.data
        for pos, (v, s) in enumerate(zip(args, self.domain)):
            v = np.asarray(v, dtype=object).reshape(-1)
            if v.shape[0] != s.dim:
                raise UsageError(f"argument {pos} has length {v.shape[0]}, expected {s.dim}")
            out = np.tensordot(v, out, axes=([0], [0]))
        return normalized(out)

    def with_data(self, data) -> "MultiMap":
        return MultiMap(self.domain, self.codomain, data)

    # arithmetic -------------------------------------------------------------

    def _check_same(self, other: "MultiMap"):
        if not isinstance(other, MultiMap):
            return NotImplemented
        if self.domain != other.domain or self.codomain != other.codomain:
            raise UsageError("maps live on different spaces")
        return None

    def __add__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return self.with_data(self.data + other.data)

    def __sub__(self, other):
        if self._check_same(other) is NotImplemented:
            return NotImplemented
        return self.with_data(self.data - other.data)

    def __neg__(self):
        return self.with_data(-self.data)

    def __mul__(self, scalar):
        return self.with_data(self.data * rat(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and not np.any(self.data != other.data))

    __hash__ = None

    def __repr__(self):
        shape = "x".join(str(s.dim) for s in self.domain)
        return f"MultiMap({shape} -> {self.codomain.dim}, {len(self.table)} nonzero)"


@dataclass(frozen=True)
class Shuffle:
    perm: tuple[int, ...]  # 1-based images perm(1), ..., perm(i+j)
    sign: int


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


@lru_cache(maxsize=None)
def shuffles(i: int, j: int) -> tuple[Shuffle, ...]:
    """All (i, j)-shuffles with their signs, in lexicographic order."""
    if i < 0 or j < 0:
        raise UsageError("shuffle sizes must be nonnegative")
    n = i + j
    out = []
    for head in itertools.combinations(range(1, n + 1), i):
        tail = tuple(k for k in range(1, n + 1) if k not in head)
        perm = head + tail
        out.append(Shuffle(perm, -1 if inversions(perm) % 2 else 1))
    return tuple(out)


class ElementaryBasis(Sequence):
    """Indexed basis of Hom(U_1 x ... x U_k, W) by elementary maps.

    Index ``n`` is the row-major position in the structure array, so the
    coordinates of a map are ``map.data.reshape(-1)``.
    """

    def __init__(self, domains: Sequence[Space], codomain: Space):
        self.domains = tuple(domains)
        self.codomain = codomain
        self.shape = tuple(s.dim for s in self.domains) + (codomain.dim,)

    def __len__(self):
        return math.prod(self.shape)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return [self[k] for k in range(*n.indices(len(self)))]
        if not 0 <= n < len(self):
            raise IndexError(n)
        arr = zeros(*self.shape)
        arr[np.unravel_index(n, self.shape)] = 1
        return MultiMap(self.domains, self.codomain, arr)

    def coordinates(self, f: MultiMap) -> np.ndarray:
        return f.data.reshape(-1).copy()


def map_space_dim(domains: Sequence[Space], codomain: Space) -> tuple[int, ElementaryBasis]:
    basis = ElementaryBasis(domains, codomain)
    return len(basis), basis


# einsum over exact object arrays ---------------------------------------------

LETTERS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


def contract(subscripts: str, *operands) -> np.ndarray:
    """``np.einsum`` on object arrays (exact arithmetic, no BLAS)."""
    out = np.einsum(subscripts, *[np.asarray(op, dtype=object) for op in operands],
                    optimize=False)
    return np.asarray(out, dtype=object)


def iter_tuples(dims: Iterable[int]):
    return itertools.product(*(range(d) for d in dims))
