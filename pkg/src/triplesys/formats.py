"""JSON documents (version "1") for algebras, representations, cochains,
2-term systems, crossed modules, Lie triple 2-systems and check reports.

Rationals are JSON integers or strings "p/q" with q > 0.  Multilinear maps
are sparse entry lists ``[{"args": [i, j, ...], "value": {label: rational}}]``
with zero values omitted.  ``emit`` is canonical: keys sorted, entries sorted
by index tuple, rationals in lowest terms, so equal values give equal bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .algebras import ARITY, LTS, Algebra, CheckReport, Rep
from .errors import ParseError, TriplesysError, UsageError, ValidationError
from .exactlin import format_rat, rat, zeros
from .multilinear import MultiMap, Space
from .twoterm.categorify import TwoVectorSystem
from .twoterm.classify import CrossedModule
from .twoterm.systems import TwoTermSystem

VERSION = "1"
ALGEBRA, REPRESENTATION, COCHAIN = "algebra", "representation", "cochain"
TWO_TERM, CROSSED, TWO_VECTOR, REPORT = "two_term_system", "crossed_module", "two_vector_system", "report"
QUADRUPLE = "quadruple"
KINDS = (ALGEBRA, REPRESENTATION, COCHAIN, TWO_TERM, CROSSED, TWO_VECTOR, QUADRUPLE, REPORT)


@dataclass(frozen=True, eq=False)
class Quadruple:
    """(LTS, module V, representation on V, 3-cochain with values in V)."""

    lts: Algebra
    space: Space
    rep: Rep
    omega: MultiMap

    def __eq__(self, other):
        if not isinstance(other, Quadruple):
            return NotImplemented
        return (self.lts == other.lts and self.space == other.space
                and self.rep.rho == other.rep.rho and self.omega == other.omega)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Document:
    kind: str
    payload: Any
    version: str = VERSION

    def __eq__(self, other):
        if not isinstance(other, Document):
            return NotImplemented
        return self.kind == other.kind and self.version == other.version and \
            _payload_eq(self.payload, other.payload)

    __hash__ = None


def _payload_eq(a, b) -> bool:
    if isinstance(a, Rep) and isinstance(b, Rep):
        return a.base == b.base and a.space == b.space and a.rho == b.rho
    return type(a) is type(b) and a == b


# emission ----------------------------------------------------------------------------


def _rat_json(x):
    s = format_rat(x)
    return int(s) if "/" not in s else s


def _vector_json(space: Space, vec) -> dict:
    return {space.labels[k]: _rat_json(c) for k, c in enumerate(vec) if c != 0}


def _entries_json(m: MultiMap) -> list:
    return [{"args": list(idx), "value": _vector_json(m.codomain, vec)}
            for idx, vec in sorted(m.table.items())]


def _matrix_json(a) -> list:
    return [[_rat_json(c) for c in row] for row in np.asarray(a, dtype=object)]


def _matrix_entries_json(arr) -> list:
    """Sparse list of (i, j) -> matrix for an array of shape (d, d, m, m)."""
    out = []
    for i in range(arr.shape[0]):
        for j in range(arr.shape[1]):
            if np.any(arr[i, j] != 0):
                out.append({"args": [i, j], "matrix": _matrix_json(arr[i, j])})
    return out


def _algebra_json(a: Algebra) -> dict:
    return {"type": a.kind, "dimension": a.dim, "basis": list(a.space.labels),
            "bracket": {"arity": a.structure.arity, "entries": _entries_json(a.structure)}}


def _space_json(s: Space) -> dict:
    return {"dimension": s.dim, "basis": list(s.labels)}


def _rep_json(r: Rep) -> dict:
    return {"base": _algebra_json(r.base), "module_dimension": r.space.dim,
            "module_basis": list(r.space.labels), "rho": _matrix_entries_json(r.matrices)}


def _two_term_json(s: TwoTermSystem) -> dict:
    return {"t0_dim": s.n0, "t0_basis": list(s.t0.labels), "t1_dim": s.n1,
            "t1_basis": list(s.t1.labels), "d": _matrix_json(s.d),
            "b000": _entries_json(s.b000), "b001": _entries_json(s.b001),
            "b010": _entries_json(s.b010), "b100": _entries_json(s.b100), "j": _entries_json(s.j)}


def _crossed_json(cm: CrossedModule) -> dict:
    return {"g": _algebra_json(cm.g), "h": _algebra_json(cm.h), "mu": _matrix_json(cm.mu),
            "theta": _matrix_entries_json(cm.theta.matrices)}


def _two_vector_json(L: TwoVectorSystem) -> dict:
    return {"l0_dim": L.l0.dim, "l0_basis": list(L.l0.labels), "l1_dim": L.l1.dim,
            "l1_basis": list(L.l1.labels), "s": _matrix_json(L.s), "t": _matrix_json(L.t),
            "i": _matrix_json(L.i), "object_bracket": _entries_json(L.obj),
            "morphism_bracket": _entries_json(L.mor), "fundamentor": _entries_json(L.j_iso)}


def report_payload(report: CheckReport, subject: str = "", data: dict | None = None) -> dict:
    """Plain report body; rationals become strings."""
    body = {
        "subject": subject,
        "passed": report.passed,
        "identities": [{"name": n, "passed": report.ok(n)} for n in report.identities],
        "violations": [{"identity": v.identity,
                        "witness": list(v.witness_labels or map(str, v.witness)),
                        "lhs": [format_rat(c) for c in v.lhs],
                        "rhs": [format_rat(c) for c in v.rhs]} for v in report.violations],
    }
    if data is not None:
        body["data"] = data
    return body


def to_json(doc: Document) -> dict:
    p = doc.payload
    if doc.kind == ALGEBRA:
        body = _algebra_json(p)
    elif doc.kind == REPRESENTATION:
        body = _rep_json(p)
    elif doc.kind == COCHAIN:
        body = {"degree": (p.arity + 1) // 2, "domain": _space_json(p.domain[0]),
                "codomain": _space_json(p.codomain), "entries": _entries_json(p)}
    elif doc.kind == TWO_TERM:
        body = _two_term_json(p)
    elif doc.kind == CROSSED:
        body = _crossed_json(p)
    elif doc.kind == TWO_VECTOR:
        body = _two_vector_json(p)
    elif doc.kind == QUADRUPLE:
        body = {"lts": _algebra_json(p.lts), "module_dimension": p.space.dim,
                "module_basis": list(p.space.labels), "rho": _matrix_entries_json(p.rep.matrices),
                "omega": _entries_json(p.omega)}
    elif doc.kind == REPORT:
        body = dict(p)
    else:
        raise UsageError(f"unknown document kind {doc.kind!r}")
    return {"version": doc.version, "kind": doc.kind, **body}


def emit(doc: Document) -> str:
    return json.dumps(to_json(doc), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def document_for(obj) -> Document:
    """Wrap a domain value in a Document of the matching kind."""
    if isinstance(obj, Algebra):
        return Document(ALGEBRA, obj)
    if isinstance(obj, Rep):
        return Document(REPRESENTATION, obj)
    if isinstance(obj, TwoTermSystem):
        return Document(TWO_TERM, obj)
    if isinstance(obj, CrossedModule):
        return Document(CROSSED, obj)
    if isinstance(obj, TwoVectorSystem):
        return Document(TWO_VECTOR, obj)
    if isinstance(obj, MultiMap):
        return Document(COCHAIN, obj)
    if isinstance(obj, Quadruple):
        return Document(QUADRUPLE, obj)
    raise UsageError(f"no document kind for {type(obj).__name__}")


# parsing -------------------------------------------------------------------------------


class _Reader:
    """Typed access to a JSON object with path-carrying validation errors."""

    def __init__(self, obj, path: str, base_dir: Path | None):
        if not isinstance(obj, dict):
            raise ValidationError(path, "expected an object")
        self.obj, self.path, self.base_dir = obj, path, base_dir
        self.used: set[str] = set()

    def at(self, key) -> str:
        return f"{self.path}[{key}]" if isinstance(key, int) else f"{self.path}.{key}"

    def get(self, key: str, default=...):
        self.used.add(key)
        if key not in self.obj:
            if default is ...:
                raise ValidationError(self.path, f"missing field {key!r}")
            return default
        return self.obj[key]

    def int_(self, key: str, minimum: int = 0) -> int:
        v = self.get(key)
        if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
            raise ValidationError(self.at(key), f"expected an integer >= {minimum}")
        return v

    def str_(self, key: str) -> str:
        v = self.get(key)
        if not isinstance(v, str):
            raise ValidationError(self.at(key), "expected a string")
        return v

    def sub(self, key: str) -> "_Reader":
        return _Reader(self.get(key), self.at(key), self.base_dir)

    def done(self):
        extra = sorted(set(self.obj) - self.used)
        if extra:
            raise ValidationError(self.at(extra[0]), "unknown field")


def _rational(v, path: str):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise ValidationError(path, f"expected an integer or a 'p/q' string, got {v!r}")
    try:
        return rat(v)
    except ValueError as e:
        raise ValidationError(path, str(e)) from None


def _space(r: _Reader, dim_key: str, basis_key: str) -> Space:
    n = r.int_(dim_key)
    labels = r.get(basis_key)
    path = r.at(basis_key)
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ValidationError(path, "expected a list of strings")
    if len(labels) != n:
        raise ValidationError(path, f"{len(labels)} labels for dimension {n}")
    seen = set()
    for k, lab in enumerate(labels):
        if lab in seen:
            raise ValidationError(f"{path}[{k}]", f"duplicate basis label {lab!r}")
        seen.add(lab)
    return Space(tuple(labels))


def _index_list(v, path: str, spaces) -> tuple[int, ...]:
    if not isinstance(v, list):
        raise ValidationError(path, "expected a list of indices")
    if len(v) != len(spaces):
        raise ValidationError(path, f"wrong arity {len(v)}, expected {len(spaces)}")
    for k, (i, s) in enumerate(zip(v, spaces)):
        if isinstance(i, bool) or not isinstance(i, int):
            raise ValidationError(f"{path}[{k}]", "expected an integer index")
        if not 0 <= i < s.dim:
            raise ValidationError(f"{path}[{k}]", f"index {i} out of range for dimension {s.dim}")
    return tuple(v)


def _vector(v, path: str, space: Space) -> np.ndarray:
    if not isinstance(v, dict):
        raise ValidationError(path, "expected an object {label: rational}")
    out = zeros(space.dim)
    for lab, c in v.items():
        if lab not in space.labels:
            raise ValidationError(f"{path}.{lab}", f"unknown basis label {lab!r}")
        out[space.index(lab)] = _rational(c, f"{path}.{lab}")
    return out


def _entries(v, path: str, domain, codomain: Space) -> MultiMap:
    if not isinstance(v, list):
        raise ValidationError(path, "expected a list of entries")
    arr = zeros(*(s.dim for s in domain), codomain.dim)
    seen = set()
    for k, e in enumerate(v):
        er = _Reader(e, f"{path}[{k}]", None)
        idx = _index_list(er.get("args"), er.at("args"), domain)
        if idx in seen:
            raise ValidationError(er.at("args"), f"duplicate entry for {list(idx)}")
        seen.add(idx)
        arr[idx] = _vector(er.get("value"), er.at("value"), codomain)
        er.done()
    return MultiMap(domain, codomain, arr)


def _matrix(v, path: str, rows: int, cols: int) -> np.ndarray:
    if not isinstance(v, list) or len(v) != rows:
        raise ValidationError(path, f"expected a list of {rows} rows")
    out = zeros(rows, cols)
    for i, row in enumerate(v):
        if not isinstance(row, list) or len(row) != cols:
            raise ValidationError(f"{path}[{i}]", f"expected a row of length {cols}")
        for j, c in enumerate(row):
            out[i, j] = _rational(c, f"{path}[{i}][{j}]")
    return out


def _matrix_entries(v, path: str, d: int, m: int) -> np.ndarray:
    if not isinstance(v, list):
        raise ValidationError(path, "expected a list of entries")
    arr = zeros(d, d, m, m)
    g = Space.standard(d)
    seen = set()
    for k, e in enumerate(v):
        er = _Reader(e, f"{path}[{k}]", None)
        idx = _index_list(er.get("args"), er.at("args"), (g, g))
        if idx in seen:
            raise ValidationError(er.at("args"), f"duplicate entry for {list(idx)}")
        seen.add(idx)
        arr[idx] = _matrix(er.get("matrix"), er.at("matrix"), m, m)
        er.done()
    return arr


def _algebra(r: _Reader) -> Algebra:
    kind = r.str_("type")
    if kind not in ARITY:
        raise ValidationError(r.at("type"), f"unknown algebra type {kind!r}")
    space = _space(r, "dimension", "basis")
    br = r.sub("bracket")
    arity = br.int_("arity", 1)
    if arity != ARITY[kind]:
        raise ValidationError(br.at("arity"), f"wrong arity {arity} for type {kind}")
    m = _entries(br.get("entries"), br.at("entries"), (space,) * arity, space)
    br.done()
    r.done()
    return Algebra(kind, space, m)


def _algebra_ref(value, path: str, base_dir: Path | None) -> Algebra:
    """Inline algebra body, full algebra document, or {"ref": path}."""
    r = _Reader(value, path, base_dir)
    if "ref" in value:
        ref = r.str_("ref")
        r.done()
        target = Path(ref) if base_dir is None else base_dir / ref
        try:
            text = target.read_text(encoding="utf-8")
        except OSError as e:
            raise ValidationError(r.at("ref"), f"cannot read {ref!r}: {e.strerror}") from None
        doc = parse(text, target.parent)
        if doc.kind != ALGEBRA:
            raise ValidationError(r.at("ref"), f"referenced document is a {doc.kind}")
        return doc.payload
    if "kind" in value or "version" in value:
        if value.get("kind") != ALGEBRA or value.get("version") != VERSION:
            raise ValidationError(path, "embedded document must be an algebra of version 1")
        r.used.update({"kind", "version"})
    return _algebra(r)


def _wrap(path: str, fn, *args):
    """Turn construction errors of domain objects into validation errors."""
    try:
        return fn(*args)
    except (UsageError, ValueError) as e:
        raise ValidationError(path, str(e)) from None


def _parse_body(kind: str, r: _Reader):
    if kind == ALGEBRA:
        return _algebra(r)
    if kind == REPRESENTATION:
        base = _algebra_ref(r.get("base"), r.at("base"), r.base_dir)
        if base.kind != LTS:
            raise ValidationError(r.at("base"), "representations need a base of type lts")
        v = _space(r, "module_dimension", "module_basis")
        mats = _matrix_entries(r.get("rho"), r.at("rho"), base.dim, v.dim)
        r.done()
        return Rep.from_matrices(base, v, mats)
    if kind == COCHAIN:
        n = r.int_("degree", 1)
        dom, cod = r.sub("domain"), r.sub("codomain")
        g = _space(dom, "dimension", "basis")
        v = _space(cod, "dimension", "basis")
        dom.done()
        cod.done()
        m = _entries(r.get("entries"), r.at("entries"), (g,) * (2 * n - 1), v)
        r.done()
        return m
    if kind == TWO_TERM:
        t0 = _space(r, "t0_dim", "t0_basis")
        t1 = _space(r, "t1_dim", "t1_basis")
        d = _matrix(r.get("d"), r.at("d"), t0.dim, t1.dim)
        parts = {
            "b000": ((t0, t0, t0), t0), "b001": ((t0, t0, t1), t1), "b010": ((t0, t1, t0), t1),
            "b100": ((t1, t0, t0), t1), "j": ((t0,) * 5, t1),
        }
        data = {k: _entries(r.get(k), r.at(k), dom, cod).data for k, (dom, cod) in parts.items()}
        r.done()
        return TwoTermSystem.build(t0, t1, d, **data)
    if kind == CROSSED:
        g = _algebra_ref(r.get("g"), r.at("g"), r.base_dir)
        h = _algebra_ref(r.get("h"), r.at("h"), r.base_dir)
        for key, a in (("g", g), ("h", h)):
            if a.kind != LTS:
                raise ValidationError(r.at(key), "crossed modules need algebras of type lts")
        mu = _matrix(r.get("mu"), r.at("mu"), h.dim, g.dim)
        theta = _matrix_entries(r.get("theta"), r.at("theta"), h.dim, g.dim)
        r.done()
        return _wrap(r.path, CrossedModule, g, h, mu, Rep.from_matrices(h, g.space, theta))
    if kind == TWO_VECTOR:
        l0 = _space(r, "l0_dim", "l0_basis")
        l1 = _space(r, "l1_dim", "l1_basis")
        s = _matrix(r.get("s"), r.at("s"), l0.dim, l1.dim)
        t = _matrix(r.get("t"), r.at("t"), l0.dim, l1.dim)
        i = _matrix(r.get("i"), r.at("i"), l1.dim, l0.dim)
        obj = _entries(r.get("object_bracket"), r.at("object_bracket"), (l0,) * 3, l0)
        mor = _entries(r.get("morphism_bracket"), r.at("morphism_bracket"), (l1,) * 3, l1)
        fund = _entries(r.get("fundamentor"), r.at("fundamentor"), (l0,) * 5, l1)
        r.done()
        return TwoVectorSystem.build(l0, l1, s, t, i, obj.data, mor.data, fund.data)
    if kind == QUADRUPLE:
        lts = _algebra_ref(r.get("lts"), r.at("lts"), r.base_dir)
        if lts.kind != LTS:
            raise ValidationError(r.at("lts"), "expected an algebra of type lts")
        v = _space(r, "module_dimension", "module_basis")
        mats = _matrix_entries(r.get("rho"), r.at("rho"), lts.dim, v.dim)
        omega = _entries(r.get("omega"), r.at("omega"), (lts.space,) * 5, v)
        r.done()
        return Quadruple(lts, v, Rep.from_matrices(lts, v, mats), omega)
    if kind == REPORT:
        body = {k: v for k, v in r.obj.items() if k not in ("kind", "version")}
        if not isinstance(body.get("passed"), bool):
            raise ValidationError(r.at("passed"), "expected a boolean")
        return body
    raise ValidationError(r.at("kind"), f"unknown document kind {kind!r}")


def _duplicate_free(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def load_json(text) -> Any:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as e:
            line, col = _line_col(bytes(text)[: e.start].decode("utf-8", "replace"), e.start)
            raise ParseError("invalid UTF-8", line, col) from None
    try:
        return json.loads(text, object_pairs_hook=_duplicate_free,
                          parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    except ValueError as e:
        raise ParseError(str(e)) from None


def _reject_constant(name):
    raise ValueError(f"{name} is not allowed")


def parse(text, base_dir: str | Path | None = None) -> Document:
    """Strict parse of a version-1 document; ``base_dir`` resolves algebra refs."""
    obj = load_json(text)
    r = _Reader(obj, "$", Path(base_dir) if base_dir is not None else None)
    version = r.str_("version")
    if version != VERSION:
        raise ValidationError(r.at("version"), f"unsupported version {version!r}")
    kind = r.str_("kind")
    if kind not in KINDS:
        raise ValidationError(r.at("kind"), f"unknown document kind {kind!r}")
    try:
        payload = _parse_body(kind, r)
    except (ValidationError, ParseError):
        raise
    except TriplesysError as e:
        raise ValidationError("$", str(e)) from None
    return Document(kind, payload, version)


def read(path: str | Path) -> Document:
    path = Path(path)
    return parse(path.read_bytes(), path.parent)


def write(path: str | Path, doc: Document):
    Path(path).write_text(emit(doc), encoding="utf-8")
