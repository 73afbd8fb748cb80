"""Command line interface.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import coupled as cp
from . import search
from .core import (
    AxiomError, BoundedLattice, Check, CheckReport, NoResiduum, StructureError,
    check_double_negation, check_residuated, compare_map, compare_table, derive_arrow,
    full_report, residuated, verdict,
)
from .fixtures import FIXTURES
from .formats import ParseError, parse_algebra_file, render_algebra, render_algebra_file, to_residuated
from .subuniverse import CapExceeded, enumerate_subuniverses, find_tieable, neg_fixed

DEFAULT_WITNESSES = 3

REPORT_SCHEMA = {
    "type": "object",
    "required": ["algebra", "version", "checks", "summary"],
    "properties": {
        "algebra": {"type": "string"},
        "version": {"type": "string"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "witnesses"],
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skip"]},
                    "witnesses": {"type": "array",
                                  "items": {"type": "object",
                                            "additionalProperties": {"type": "string"}}},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["passed", "failed", "skipped"],
            "properties": {k: {"type": "integer", "minimum": 0}
                           for k in ("passed", "failed", "skipped")},
        },
        "info": {"type": "object"},
    },
}


class UsageError(ValueError):
    pass


# ------------------------------------------------------------ rendering


def _token(v, elements):
    if isinstance(v, int) and not isinstance(v, bool) and elements is not None and 0 <= v < len(elements):
        return elements[v]
    if isinstance(v, tuple):
        return "{" + ",".join(str(_token(x, elements)) for x in v) + "}"
    return str(v)


def _witness(check: Check, w, elements) -> dict:
    return {role: _token(v, elements) for role, v in zip(check.roles, w)}


def report_document(name: str, report: CheckReport, max_witnesses: int, info: dict | None = None) -> dict:
    checks = [{"name": c.name, "status": c.status,
               "witnesses": [_witness(c, w, report.elements) for w in c.witnesses[:max_witnesses]]}
              for c in report.checks]
    doc = {"algebra": name, "version": __version__, "checks": checks, "summary": report.counts()}
    if info:
        doc["info"] = info
    return doc


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def render_text(doc: dict) -> str:
    checks = sorted(doc["checks"], key=lambda c: c["status"] != "fail")
    width = max((len(c["name"]) for c in checks), default=0)
    out = [f"algebra: {doc['algebra']}"]
    for c in checks:
        ws = "  ".join("(" + ", ".join(f"{k}={v}" for k, v in w.items()) + ")"
                       for w in c["witnesses"])
        out.append(f"{c['status'].upper():4} {c['name'].ljust(width)}  {ws}".rstrip())
    for key, value in doc.get("info", {}).items():
        if isinstance(value, str) and "\n" in value:
            out.append(f"{key}:")
            out.extend("  " + line for line in value.rstrip("\n").split("\n"))
        else:
            out.append(f"{key}: {value}")
    s = doc["summary"]
    out.append(f"summary: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped")
    return "\n".join(out) + "\n"


def _set(elements, ids) -> str:
    return "{" + ",".join(elements[i] for i in ids) + "}"


# ------------------------------------------------------------ helpers


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse_algebra_file(text)


def _algebra(af):
    """Residuated lattice, or a failing report when the arrow cannot be derived."""
    if af.kind != "algebra":
        raise UsageError(f"expected an algebra file, got a {af.kind} file")
    lat = BoundedLattice(af.elements, af.tables["join"], af.tables["meet"], af.bottom, af.top)
    given = af.tables.get("arrow")
    try:
        return residuated(lat, af.tables["otimes"], given, name=af.name), None
    except NoResiduum as exc:
        rep = lat.check()
        rep.add(Check("residuum exists", "fail", ("y", "z"), ((exc.y, exc.z),)))
        return None, rep


def _coupled(af):
    if af.kind != "coupled":
        raise UsageError(f"expected a coupled file, got an {af.kind} file")
    return cp.to_coupled(af)


def _emit_result(args, name: str, text: str, info: dict):
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"{name}.alg"
        path.write_text(text, encoding="utf-8")
        info["written"] = str(path)
    else:
        info["result"] = text


# ------------------------------------------------------------ subcommands


def cmd_check(args):
    af = _load(args.file)
    if af.kind == "coupled":
        c = _coupled(af)
        return af.name, cp.check_coupled(c), {"kind": c.kind}
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    rep = full_report(rl)
    if "arrow" in af.tables:
        try:
            rep.add(compare_table("arrow equals derived residuum", rl.arrow,
                                  derive_arrow(rl.lattice, rl.otimes)))
        except NoResiduum as exc:
            rep.add(Check("arrow equals derived residuum", "fail", ("y", "z"), ((exc.y, exc.z),)))
    if "oplus" in af.tables:
        rep.add(compare_table("oplus equals ~(~x*~y)", af.tables["oplus"], rl.oplus))
    if "neg" in af.maps:
        rep.add(compare_map("neg equals x->0", af.maps["neg"], rl.neg))
    return af.name, rep, {}


def cmd_derive(args):
    af = _load(args.file)
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    rep = CheckReport(elements=rl.elements)
    rep.add(Check("residuum exists", "pass"))
    info: dict = {}
    _emit_result(args, af.name, render_algebra(rl, af.name, derived=True), info)
    return af.name, rep, info


def cmd_couple(args):
    af = _load(args.file)
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    try:
        c = cp.couple(rl)
    except cp.DnlRequired:
        return af.name, check_double_negation(rl), {}
    info: dict = {}
    _emit_result(args, f"C_{af.name}", render_algebra_file(cp.from_coupled(c, f"C_{af.name}")), info)
    return af.name, cp.check_general_coupled(c), info


def cmd_decouple(args):
    af = _load(args.file)
    c = _coupled(af)
    try:
        rl = cp.decouple(c)
    except cp.InvalidCoupled as exc:
        return af.name, exc.report, {}
    rep = cp.check_general_coupled(c)
    rep.extend(cp.check_untied(rl, c))
    info: dict = {}
    _emit_result(args, f"L_{af.name}", render_algebra(rl, f"L_{af.name}"), info)
    return af.name, rep, info


def cmd_roundtrip(args):
    af = _load(args.file)
    if af.kind == "coupled":
        c = _coupled(af)
        try:
            return af.name, cp.roundtrip_coupled(c), {"direction": "C(L(C)) = C"}
        except cp.InvalidCoupled as exc:
            return af.name, exc.report, {}
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    try:
        c = cp.couple(rl)
    except cp.DnlRequired:
        return af.name, check_double_negation(rl), {}
    rep = cp.check_general_coupled(c)
    rep.extend(cp.roundtrip_lattice(rl))
    rep.extend(cp.roundtrip_coupled(c))
    return af.name, rep, {"direction": "L(C(L)) = L and C(L(C)) = C"}


def _parse_subset(rl, tokens: str | None):
    if tokens is None:
        return tuple(range(rl.n))
    try:
        return tuple(sorted({rl.lattice.index(t) for t in tokens.split(",") if t}))
    except StructureError as exc:
        raise UsageError(str(exc)) from None


def cmd_tie(args):
    af = _load(args.file)
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    A = _parse_subset(rl, args.subuniverse)
    rep = cp.tie_preconditions(rl, A)
    info = {"A": _set(rl.elements, A)}
    if not rep.ok:
        return af.name, rep, info
    y = cp.tie(rl, A)
    info["B"] = _set(y.elements, y.B)
    rep.extend(cp.check_tied(y))
    _emit_result(args, f"Y_{af.name}", render_algebra_file(cp.from_coupled(y, f"Y_{af.name}")), info)
    return af.name, rep, info


def cmd_untie(args):
    af = _load(args.file)
    c = _coupled(af).with_kind(cp.TIED)
    try:
        rl = cp.untie(c)
    except cp.InvalidTied as exc:
        return af.name, exc.report, {}
    except cp.ClosureFails as exc:
        rep = cp.check_tied(c)
        rep.add(Check(f"B closed under {exc.op}", "fail", ("x", "y"), (exc.witness,)))
        return af.name, rep, {}
    rep = cp.check_tied(c)
    rep.extend(cp.check_untied(rl, c))
    info = {"B": _set(c.elements, c.B)}
    _emit_result(args, f"A_{af.name}", render_algebra(rl, f"A_{af.name}"), info)
    return af.name, rep, info


def cmd_subuniverses(args):
    af = _load(args.file)
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    subs = enumerate_subuniverses(rl, cap=args.max_size or 8)
    rep = CheckReport(elements=rl.elements)
    try:
        fixed = neg_fixed(rl)
        rep.add(Check("negation image equals ~~-fixed points", "pass"))
    except AssertionError:
        fixed = ()
        rep.add(Check("negation image equals ~~-fixed points", "fail", ("x",),
                      tuple((x,) for x in range(rl.n) if rl.neg[rl.neg[x]] != x)))
    info = {"subuniverses": [_set(rl.elements, A) for A in subs],
            "negation image": _set(rl.elements, fixed)}
    return af.name, rep, info


def cmd_tieable(args):
    af = _load(args.file)
    rl, failed = _algebra(af)
    if rl is None:
        return af.name, failed, {}
    found = find_tieable(rl, cap=args.max_size or 8)
    rep = CheckReport(elements=rl.elements)
    for A in found:
        rep.add(verdict(f"Y(L,{_set(rl.elements, A)}) is a tied semiring", ("check",),
                        [(c.name,) for c in cp.check_tied(cp.tie(rl, A)).failures()]))
    return af.name, rep, {"tieable": [_set(rl.elements, A) for A in found]}


def _size(args) -> int:
    n = args.max_size or search.DEFAULT_SIZE
    if not 2 <= n <= search.MAX_SIZE:
        raise UsageError(f"--max-size must be in 2..{search.MAX_SIZE}")
    return n


def cmd_enumerate(args):
    corpus = search.build_corpus(_size(args), jobs=args.jobs)
    files = [f"{rl.name}.alg" for rl in corpus.algebras]
    text = search.manifest(corpus, files)
    info: dict = {"lattices": json.dumps(corpus.lattice_counts, sort_keys=True),
                  "algebras": len(corpus)}
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for rl, fname in zip(corpus.algebras, files):
            (out / fname).write_text(render_algebra(rl), encoding="utf-8")
        (out / "manifest.json").write_text(text, encoding="utf-8")
        info["written"] = str(out)
    else:
        info["manifest"] = text
    rep = CheckReport()
    rep.add(Check("enumeration completed", "pass"))
    return f"corpus<={corpus.max_size}", rep, info


def cmd_verify_corpus(args):
    corpus = search.build_corpus(_size(args), jobs=args.jobs)
    result = search.verify_corpus(corpus, jobs=args.jobs)
    info = {k: result.tallies[k] for k in sorted(result.tallies)}
    return f"corpus<={corpus.max_size}", result.report, info


def cmd_examples(args):
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    written = []
    rep = CheckReport()
    for name, text in FIXTURES.items():
        rl = to_residuated(parse_algebra_file(text))
        # oplus and neg come from the stored otimes, never from the printed tables
        path = out / f"{name}.alg"
        path.write_text(render_algebra(rl, name, derived=True), encoding="utf-8")
        written.append(str(path))
        rep.add(verdict(f"{name} is a residuated lattice", ("check",),
                        [(c.name,) for c in check_residuated(rl).failures()]))
    return "examples", rep, {"written": written}


COMMANDS = {
    "check": (cmd_check, "run every applicable check on an algebra or coupled file"),
    "derive": (cmd_derive, "derive arrow, negation and oplus from join/meet/otimes"),
    "couple": (cmd_couple, "build the general coupled semiring of a DNL residuated lattice"),
    "decouple": (cmd_decouple, "recover the residuated lattice of a general coupled semiring"),
    "roundtrip": (cmd_roundtrip, "verify both round trips between lattices and coupled semirings"),
    "tie": (cmd_tie, "build the tied semiring of a subuniverse"),
    "untie": (cmd_untie, "recover the residuated lattice on B of a tied semiring"),
    "subuniverses": (cmd_subuniverses, "list all subuniverses"),
    "tieable": (cmd_tieable, "list subuniverses admitting a tied semiring"),
    "enumerate": (cmd_enumerate, "enumerate residuated lattices up to isomorphism"),
    "verify-corpus": (cmd_verify_corpus, "verify every suite over the enumerated corpus"),
    "examples": (cmd_examples, "write the three worked examples as .alg files"),
}

FILE_COMMANDS = {"check", "derive", "couple", "decouple", "roundtrip", "tie", "untie",
                 "subuniverses", "tieable"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--witnesses", type=int, default=DEFAULT_WITNESSES, metavar="MAX",
                        help="witnesses shown per check (default %(default)s)")
    common.add_argument("--max-size", type=int, default=None, metavar="N",
                        help="size cap for enumeration and subuniverse scans")
    common.add_argument("--out", default=None, metavar="DIR", help="output directory")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser = argparse.ArgumentParser(prog="reslat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name in FILE_COMMANDS:
            p.add_argument("file")
        if name == "tie":
            p.add_argument("--subuniverse", default=None, metavar="TOKS",
                           help="comma-separated element tokens (default: whole carrier)")
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        name, report, info = COMMANDS[args.command][0](args)
    except (ParseError, StructureError, UsageError, CapExceeded, AxiomError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = report_document(name, report, args.witnesses, info)
    stdout.write(render_json(doc) if args.json else render_text(doc))
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
