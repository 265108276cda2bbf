"""Exact rational scalars and dense matrices.

Scalars are Python ``int`` or :class:`fractions.Fraction` (always in lowest
terms); matrices are 2-d numpy arrays of dtype ``object`` holding such
scalars.  Elimination is fraction-free (Bareiss) on integer-scaled rows, so
pivots stay integral and no floating point is ever involved.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import UsageError

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def normalize(x):
    """Collapse integral fractions to ``int``; leave other rationals alone."""
    t = type(x)
    if t is int:
        return x
    if t is Fraction:
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, float):
        raise TypeError(f"inexact value {x!r} in exact computation")
    return x


def rat(value):
    """Coerce ``value`` to an exact rational.

    Accepts ints, Fractions and strings ``"p"`` or ``"p/q"`` with ``q > 0``.
    Floats and booleans are rejected: they would smuggle in inexact input.
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return normalize(value)
    if isinstance(value, Rational):
        return normalize(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if not m:
            raise ValueError(f"not a rational: {value!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return normalize(Fraction(num, den))
    raise ValueError(f"not a rational: {value!r}")


def format_rat(x) -> str:
    x = normalize(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def as_array(values) -> np.ndarray:
    """Object array of exact rationals with the same shape as ``values``."""
    arr = np.array(values, dtype=object)
    flat = arr.reshape(-1)
    for i, v in enumerate(flat):
        flat[i] = rat(v)
    return arr


def as_matrix(rows, shape=None) -> np.ndarray:
    m = as_array(rows)
    if shape is not None:
        m = m.reshape(shape)
    if m.ndim != 2:
        raise UsageError(f"expected a 2-d matrix, got shape {m.shape}")
    return m


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


_INT64_SAFE = 2 ** 62


def as_int64(arr):
    """Exact int64 copy of an object array of Python ints, else ``None``.

    Returns ``None`` if any entry is a non-integer or reaches 2**62 in size;
    callers bound their own accumulation with ``max_abs``.
    """
    arr = np.asarray(arr, dtype=object)
    if arr.size == 0:
        return arr.astype(np.int64)
    if set(map(type, arr.flat)) != {int}:
        return None
    if max(map(abs, arr.flat)) >= _INT64_SAFE:
        return None
    return arr.astype(np.int64)


def max_abs(arr) -> int:
    arr = np.asarray(arr)
    return int(np.abs(arr).max()) if arr.size else 0


def is_zero(arr) -> bool:
    return not np.any(np.asarray(arr) != 0)


def normalized(arr) -> np.ndarray:
    out = np.array(arr, dtype=object)
    flat = out.reshape(-1)
    for i, v in enumerate(flat):
        if type(v) is not int:
            flat[i] = normalize(v)
    return out


def _integer_rows(m: np.ndarray) -> np.ndarray:
    # scaling a row by a nonzero constant changes neither rank nor kernel
    out = np.empty(m.shape, dtype=object)
    for i, row in enumerate(m):
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                den = math.lcm(den, v.denominator)
        for j, v in enumerate(row):
            out[i, j] = int(v * den)
    return out


def echelon(m) -> tuple[np.ndarray, list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero integer rows of the echelon form and the pivot
    column of each.  Every division in the Bareiss update is exact.
    """
    a = _integer_rows(np.asarray(m, dtype=object))
    rows, cols = a.shape
    r, prev, pivots = 0, 1, []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c] != 0)
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        piv = a[r, c]
        if r + 1 < rows:
            a[r + 1:, c + 1:] = (piv * a[r + 1:, c + 1:]
                                 - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
            a[r + 1:, c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Q (nonzero rows only) and pivot columns."""
    e, pivots = echelon(m)
    r = np.empty(e.shape, dtype=object)
    for idx, v in np.ndenumerate(e):
        r[idx] = Fraction(v)
    for i in reversed(range(len(pivots))):
        p = pivots[i]
        r[i] = r[i] / r[i, p]
        if i:
            r[:i] = r[:i] - np.outer(r[:i, p], r[i])
    return normalized(r), pivots


_PRIME = 2147483629  # below 2**31, so products of residues fit in int64
_FAST_RANK_SIZE = 4096


def _pivot_rows_mod_p(a: np.ndarray) -> list[int]:
    """Original indices of rows that are independent modulo ``_PRIME``."""
    a = np.array([[int(v) % _PRIME for v in row] for row in a], dtype=np.int64)
    order = np.arange(a.shape[0])
    r = 0
    for c in range(a.shape[1]):
        if r == a.shape[0]:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        a[[r, k]] = a[[k, r]]
        order[[r, k]] = order[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), _PRIME - 2, _PRIME) % _PRIME
        a[r + 1:] = (a[r + 1:] - np.outer(a[r + 1:, c], a[r]) % _PRIME) % _PRIME
        r += 1
    return sorted(int(i) for i in order[:r])


def rank(m) -> int:
    """Exact rank over Q.

    Large matrices first pick rows that are independent modulo a prime
    (hence independent over Q) and then certify that the kernel of those
    rows kills the whole matrix; only if that certificate fails does the
    full fraction-free elimination run.
    """
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    if m.size < _FAST_RANK_SIZE:
        return len(echelon(m)[1])
    ints = _integer_rows(m)
    rows = _pivot_rows_mod_p(ints)
    free, pivots, y, det = _scaled_kernel(ints[rows])
    if not free:
        return len(pivots)
    k = zeros(m.shape[1], len(free))
    k[pivots] = y
    k[free, range(len(free))] = det
    if is_zero(np.dot(ints, k)):
        return len(pivots)
    return len(echelon(m)[1])


def _scaled_kernel(m: np.ndarray):
    """Integer kernel data (free columns, pivots, Y, D) with ``D * v`` integral.

    Back-substitution runs on the integer Bareiss form: ``D`` is the last
    pivot (the determinant of the pivot minor), so by Cramer's rule every
    division below is exact.
    """
    cols = m.shape[1]
    if m.shape[0] == 0 or cols == 0:
        u, pivots = zeros(0, cols), []
    else:
        u, pivots = echelon(m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    r = len(pivots)
    det = u[r - 1, pivots[-1]] if r else 1
    y = zeros(r, len(free))
    for i in reversed(range(r)):
        acc = -det * u[i, free]
        if i + 1 < r:
            acc = acc - np.dot(u[i, pivots[i + 1:]], y[i + 1:])
        y[i] = acc // u[i, pivots[i]]
    return free, pivots, y, det


def kernel_basis(m) -> list[np.ndarray]:
    """Basis of the right null space, one vector per free column.

    Each basis vector has a 1 in its free column and 0 in the other free
    columns, so the output is deterministic.
    """
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise UsageError(f"expected a 2-d matrix, got shape {m.shape}")
    free, pivots, y, det = _scaled_kernel(m)
    basis = []
    for k, f in enumerate(free):
        v = zeros(m.shape[1])
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = normalize(Fraction(y[i, k], det))
        basis.append(v)
    return basis


def solve(m, b) -> np.ndarray | None:
    """Some ``x`` with ``m @ x == b``, or ``None`` when inconsistent."""
    m = np.asarray(m, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    if m.ndim != 2 or b.shape[0] != m.shape[0]:
        raise UsageError(
            f"dimension mismatch: matrix {m.shape}, right-hand side {b.shape}")
    cols = m.shape[1]
    if m.shape[0] == 0:
        return zeros(cols)
    r, pivots = rref(np.column_stack([m, b]))
    if pivots and pivots[-1] == cols:
        return None
    x = zeros(cols)
    for i, p in enumerate(pivots):
        x[p] = r[i, cols]
    return x


def inverse(m) -> np.ndarray:
    m = np.asarray(m, dtype=object)
    n = m.shape[0]
    if m.shape != (n, n):
        raise UsageError(f"inverse of non-square matrix {m.shape}")
    r, pivots = rref(np.column_stack([m, identity(n)]))
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise UsageError("matrix is singular")
    return r[:, n:]


def matmul(a, b) -> np.ndarray:
    return normalized(np.dot(np.asarray(a, dtype=object), np.asarray(b, dtype=object)))
