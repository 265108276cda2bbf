"""Command-line entry point: ``triplesys check|cohomology|mc|oracle|convert``.

Exit codes: 0 all checks passed or the computation succeeded, 1 a
mathematical check or precondition failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats as F
from .algebras import (LEIBNIZ, LIE, LTS, NAMBU, Algebra, CheckReport, Rep, Violation,
                       adjoint_rep, check_leibniz, check_lie, check_lts, check_nambu,
                       check_representation)
from .cohomology import coboundary, cochain_basis, cohomology_table, oracle_delta_vs_bracket
from .controlling import c_degree, is_lts_cochain, mc_defect
from .errors import ParseError, PreconditionError, TriplesysError, UsageError, ValidationError
from .exactlin import format_rat
from .multilinear import MultiMap
from .twoterm.categorify import categorify, check_two_vector, decategorify
from .twoterm.classify import (check_crossed_module, crossed_to_strict, quadruple_to_skeletal,
                               skeletal_to_quadruple, strict_to_crossed)
from .twoterm.systems import check_two_term

OK, FAILED, USAGE = 0, 1, 2


class _Usage(Exception):
    """Raised inside commands for input errors (exit code 2)."""


def _load(path: str) -> F.Document:
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as e:
        raise _Usage(f"cannot read {path}: {e.strerror}") from None
    try:
        return F.parse(data, p.parent)
    except (ParseError, ValidationError) as e:
        raise _Usage(f"{path}: {e}") from None


def _out(text: str):
    sys.stdout.write(text)


def _print_report(report: CheckReport, limit: int = 5):
    width = max((len(n) for n in report.identities), default=0)
    for name in report.identities:
        bad = report.failed(name)
        _out(f"{name.ljust(width)} {'ok' if not bad else f'FAIL ({len(bad)} violations)'}\n")
        for v in bad[:limit]:
            args = ", ".join(v.witness_labels or map(str, v.witness))
            lhs = ", ".join(format_rat(c) for c in v.lhs)
            rhs = ", ".join(format_rat(c) for c in v.rhs)
            _out(f"    at ({args}): lhs=[{lhs}] rhs=[{rhs}]\n")
        if len(bad) > limit:
            _out(f"    ... {len(bad) - limit} more\n")


def _finish(report: CheckReport, as_json: bool, subject: str, data=None) -> int:
    if as_json:
        _out(F.emit(F.Document(F.REPORT, F.report_payload(report, subject, data))))
    else:
        _print_report(report)
    return OK if report.passed else FAILED


# check ---------------------------------------------------------------------------------

_ALGEBRA_CHECKS = {LTS: check_lts, NAMBU: check_nambu, LEIBNIZ: check_leibniz, LIE: check_lie}
_KIND_FOR = {"rep": F.REPRESENTATION, "two-term": F.TWO_TERM, "crossed": F.CROSSED,
             "two-vector": F.TWO_VECTOR, "cochain": F.COCHAIN, "quadruple": F.QUADRUPLE}


def _cochain_report(m: MultiMap) -> CheckReport:
    if len(set(m.domain)) != 1:
        raise _Usage("cochain domain must be a single space")
    try:
        flag = is_lts_cochain(m)
    except UsageError as e:
        raise _Usage(str(e)) from None
    r = CheckReport()
    r.identities += ["condition1", "condition2"]
    for name, ok in (("condition1", flag.cond1), ("condition2", flag.cond2)):
        if not ok:
            r.violations.append(Violation(name, (), (), ()))
    return r


def _quadruple_report(q) -> CheckReport:
    """Representation identities, cochain constraints and the cocycle condition."""
    r = check_representation(q.rep)
    r.identities += ["cochain", "cocycle"]
    if not cochain_basis(q.lts, q.rep, 3).contains(q.omega):
        r.violations.append(Violation("cochain", (), (), ()))
    elif r.passed:
        dw = coboundary(q.lts, q.rep, q.omega)
        for idx, vec in sorted(dw.table.items()):
            labels = tuple(q.lts.space.labels[i] for i in idx)
            r.violations.append(Violation("cocycle", idx, tuple(vec), (0,) * len(vec), labels))
    return r


def cmd_check(args) -> int:
    doc = _load(args.path)
    kind, p = doc.kind, doc.payload
    want = args.kind
    if kind == F.ALGEBRA:
        if want in ("auto", p.kind):
            check = _ALGEBRA_CHECKS[p.kind]
            target = p
        elif want in _ALGEBRA_CHECKS:
            check, target = _ALGEBRA_CHECKS[want], p.as_kind(want)
        else:
            raise _Usage(f"--kind {want} does not apply to an algebra document")
        try:
            report = check(target)
        except UsageError as e:
            raise _Usage(str(e)) from None
        return _finish(report, args.json, f"{target.kind} {args.path}")
    if want != "auto" and _KIND_FOR.get(want) != kind:
        raise _Usage(f"--kind {want} does not apply to a {kind} document")
    if kind == F.REPRESENTATION:
        report = check_representation(p)
    elif kind == F.TWO_TERM:
        report = check_two_term(p)
    elif kind == F.CROSSED:
        report = check_crossed_module(p)
    elif kind == F.TWO_VECTOR:
        report = check_two_vector(p)
    elif kind == F.COCHAIN:
        report = _cochain_report(p)
    elif kind == F.QUADRUPLE:
        report = _quadruple_report(p)
    else:
        raise _Usage(f"nothing to check in a {kind} document")
    return _finish(report, args.json, f"{kind} {args.path}")


# cohomology -----------------------------------------------------------------------------


def _require_lts(doc: F.Document, path: str) -> Algebra:
    if doc.kind != F.ALGEBRA:
        raise _Usage(f"{path}: expected an algebra document, got {doc.kind}")
    if doc.payload.kind != LTS:
        raise _Usage(f"{path}: expected an algebra of type lts, got {doc.payload.kind}")
    return doc.payload


def cmd_cohomology(args) -> int:
    if args.max_degree < 1:
        raise _Usage("--max-degree must be >= 1")
    lts = _require_lts(_load(args.path), args.path)
    report = check_lts(lts)
    if not report.passed:
        _out("algebra is not a Lie triple system\n")
        return _finish(report, args.json, f"lts {args.path}")
    if args.rep == "adjoint":
        rep = adjoint_rep(lts)
    else:
        rdoc = _load(args.rep)
        if rdoc.kind != F.REPRESENTATION:
            raise _Usage(f"{args.rep}: expected a representation document")
        rep = rdoc.payload
        if rep.base.space != lts.space or rep.base.structure != lts.structure:
            raise _Usage(f"{args.rep}: representation is over a different algebra")
        rep = Rep(lts, rep.space, rep.rho)
    rep_report = check_representation(rep)
    if not rep_report.passed:
        _out("coefficients fail the representation identities\n")
        return _finish(rep_report, args.json, f"representation {args.rep}")
    rows = cohomology_table(lts, rep, args.max_degree, check_rep=False)
    if args.json:
        return _finish(CheckReport(), True, f"cohomology {args.path} rep={args.rep}", {"rows": rows})
    _out(f"{'n':>3} {'dim C^n':>10} {'rank d_n':>10} {'dim H^n':>10}\n")
    for row in rows:
        _out(f"{row['n']:>3} {row['dim_c']:>10} {row['rank']:>10} {row['dim_h']:>10}\n")
    return OK


# mc --------------------------------------------------------------------------------------


def cmd_mc(args) -> int:
    doc = _load(args.path)
    if doc.kind != F.ALGEBRA or doc.payload.kind not in (NAMBU, LTS):
        raise _Usage("mc expects an algebra of type nambu or lts")
    a = doc.payload
    defect = mc_defect(a)
    table = defect.table
    if table:
        idx = min(table)
        g = a.space
        labels = [g.labels[i] for i in idx]
        pairs = [f"{labels[2 * k]}⊗{labels[2 * k + 1]}" for k in range(c_degree(defect))]
        witness = ", ".join(pairs + [labels[-1]])
        mc_line = f"MC: no (defect at ({witness}))"
    else:
        mc_line = "MC: yes"
    flag = is_lts_cochain(a.structure)
    broken = [n for n, ok in (("condition1", flag.cond1), ("condition2", flag.cond2)) if not ok]
    cons = "no (" + ", ".join(broken) + ")" if broken else "yes"
    _out(f"{mc_line}; constraints: {cons}\n")
    ok = not table and (a.kind == NAMBU or flag.passed)
    return OK if ok else FAILED


# oracle ----------------------------------------------------------------------------------


def cmd_oracle(args) -> int:
    lts = _require_lts(_load(args.path), args.path)
    if args.degree < 1:
        raise _Usage("--degree must be >= 1")
    base = check_lts(lts)
    if not base.passed:
        _out("algebra is not a Lie triple system\n")
        return _finish(base, args.json, f"lts {args.path}")
    report = oracle_delta_vs_bracket(lts, args.degree)
    if not args.json:
        _out(f"degree {args.degree}: delta f = (-1)^(n-1) [[pi, f]] "
             f"{'on every basis cochain' if report.passed else 'FAILS'}\n")
    return _finish(report, args.json, f"oracle {args.path} n={args.degree}")


# convert ---------------------------------------------------------------------------------

_CONVERSIONS = {
    "quadruple": (F.TWO_TERM,), "skeletal": (F.QUADRUPLE,), "crossed": (F.TWO_TERM,),
    "strict": (F.CROSSED,), "categorified": (F.TWO_TERM,), "decategorified": (F.TWO_VECTOR,),
}


def cmd_convert(args) -> int:
    doc = _load(args.path)
    if doc.kind not in _CONVERSIONS[args.to]:
        raise _Usage(f"--to {args.to} needs a {' or '.join(_CONVERSIONS[args.to])} document, "
                     f"got {doc.kind}")
    p = doc.payload
    if args.to == "quadruple":
        out = F.Document(F.QUADRUPLE, F.Quadruple(*skeletal_to_quadruple(p)))
    elif args.to == "skeletal":
        out = F.Document(F.TWO_TERM, quadruple_to_skeletal(p.lts, p.rep.space, p.rep, p.omega))
    elif args.to == "crossed":
        out = F.Document(F.CROSSED, strict_to_crossed(p))
    elif args.to == "strict":
        out = F.Document(F.TWO_TERM, crossed_to_strict(p))
    elif args.to == "categorified":
        report = check_two_term(p)
        if not report.passed:
            raise PreconditionError(f"not a 2-term homotopy LTS: {report.violations[0].describe()}")
        out = F.Document(F.TWO_VECTOR, categorify(p))
    else:
        report = check_two_vector(p)
        if not report.passed:
            raise PreconditionError(f"not a Lie triple 2-system: {report.violations[0].describe()}")
        out = F.Document(F.TWO_TERM, decategorify(p))
    text = F.emit(out)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            raise _Usage(f"cannot write {args.out}: {e.strerror}") from None
    else:
        _out(text)
    return OK


# entry point -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="triplesys", description="Exact checks and cohomology for Lie triple systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check the axioms of a document")
    c.add_argument("path")
    c.add_argument("--kind", default="auto",
                   choices=["auto", LTS, NAMBU, LEIBNIZ, LIE, "rep", "two-term", "crossed",
                            "two-vector", "cochain", "quadruple"])
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    h = sub.add_parser("cohomology", help="dimensions of C^n, rank of delta_n and H^n")
    h.add_argument("path")
    h.add_argument("--rep", default="adjoint", help="representation file or 'adjoint'")
    h.add_argument("--max-degree", type=int, default=2)
    h.add_argument("--json", action="store_true")
    h.set_defaults(func=cmd_cohomology)

    m = sub.add_parser("mc", help="Maurer-Cartan test [[pi, pi]] = 0 and the LTS constraints")
    m.add_argument("path")
    m.set_defaults(func=cmd_mc)

    o = sub.add_parser("oracle", help="compare delta with the signed bracket with pi")
    o.add_argument("path")
    o.add_argument("--degree", type=int, default=1)
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("convert", help="skeletal/strict correspondences and (de)categorification")
    v.add_argument("path")
    v.add_argument("--to", required=True, choices=list(_CONVERSIONS))
    v.add_argument("--out")
    v.set_defaults(func=cmd_convert)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE
    except PreconditionError as e:
        sys.stderr.write(f"precondition failed: {e}\n")
        return FAILED
    except (ParseError, ValidationError, UsageError) as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE
    except TriplesysError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
