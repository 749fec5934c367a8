"""Batch front-end: validate instance files, evaluate tense operators, run
verification suites, export JSON.

Exit codes: 0 success, 1 validation failure or counterexample, 2 malformed
input.  Reports for identical (seed, cases, inputs) are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dsl
from .errors import (ArityError, ParseError, ResolveError, TensePosetError,
                     UnknownLabelError)
from .poset import ENUM_CAP, bits
from .report import Report
from .residuated import validate_residuated
from .suites import SUITE_ORDER, SUITES, SuiteContext, run_all, run_suite
from .tense import PHI_CAP, TenseOp, apply_tense, compose, make_family

LOAD_ERRORS = (ParseError, ResolveError, ArityError)


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


def _load(path):
    with open(path, "r", encoding="utf-8") as handle:
        return dsl.parse(handle.read())


def _print(out, text):
    out.write(text + "\n")


def cmd_check(args, out) -> int:
    try:
        inst = _load(args.input)
    except LOAD_ERRORS as exc:
        _print(out, f"parse error: {exc}")
        return 2
    except TensePosetError as exc:
        _print(out, f"invalid: {type(exc).__name__}: {exc}")
        return 1
    lines = []
    ok = True
    for name, p in inst.posets.items():
        tags = [f"{p.n} elements"]
        tags.append("bounded" if p.is_bounded() else "unbounded")
        if p.involution is not None:
            tags.append("involution")
        lines.append(f"poset {name}: ok ({', '.join(tags)})")
    for name, f in inst.frames.items():
        tags = [f"{f.m} points"]
        tags.append("serial" if f.serial else "not serial")
        if f.reflexive:
            tags.append("reflexive")
        lines.append(f"frame {name}: ok ({', '.join(tags)})")
    for name in inst.props:
        lines.append(f"prop {name}: ok")
    for name in inst.families:
        lines.append(f"family {name}: ok")
    for name, decl in inst.residuated.items():
        rep = validate_residuated(decl.table)
        if rep.ok:
            lines.append(f"residuated {name}: ok (axioms 1-5 hold)")
        else:
            ok = False
            label, detail = rep.first_failure()
            lines.append(f"residuated {name}: FAIL {label} at {detail}")
    if args.format == "json":
        _print(out, json.dumps({"status": "ok" if ok else "invalid",
                                "structures": lines}, indent=2))
    else:
        for line in lines:
            _print(out, line)
        _print(out, "check PASS" if ok else "check FAIL")
    return 0 if ok else 1


def _resolve_structure(inst, kind, requested):
    store = getattr(inst, kind)
    if requested:
        if requested not in store:
            raise ResolveError(f"unknown {kind[:-1]} {requested!r}")
        return requested, store[requested]
    if len(store) != 1:
        raise ResolveError(f"file declares {len(store)} {kind}; "
                           f"pick one with --{kind[:-1]}")
    return next(iter(store.items()))


def _resolve_family(inst, spec, poset_name, frame_name):
    """A family flag is a declared family name, a prop name, or a brace list
    of prop names."""
    names = None
    if spec.startswith("{") and spec.endswith("}"):
        names = [s.strip() for s in spec[1:-1].split(",") if s.strip()]
    elif spec in inst.families:
        names = list(inst.families[spec].members)
    elif spec in inst.props:
        names = [spec]
    if not names:
        raise ResolveError(f"cannot resolve family {spec!r}")
    props = []
    for name in names:
        if name not in inst.props:
            raise ResolveError(f"unknown proposition {name!r}")
        decl = inst.props[name]
        if decl.poset != poset_name or decl.frame != frame_name:
            raise ResolveError(f"proposition {name!r} lives on a different "
                               "poset or frame")
        props.append(decl.values)
    label = names[0] if len(names) == 1 else "{" + ",".join(names) + "}"
    return label, make_family(props)


def _slice_text(p, mask):
    labs = [str(p.labels[i]) for i in bits(mask)]
    return labs[0] if len(labs) == 1 else "{" + ",".join(labs) + "}"


def cmd_tense(args, out) -> int:
    try:
        inst = _load(args.input)
    except LOAD_ERRORS as exc:
        _print(out, f"parse error: {exc}")
        return 2
    except TensePosetError as exc:
        _print(out, f"invalid: {type(exc).__name__}: {exc}")
        return 1
    try:
        pname, p = _resolve_structure(inst, "posets", args.poset)
        fname, f = _resolve_structure(inst, "frames", args.frame)
        label, family = _resolve_family(inst, args.family, pname, fname)
        op = TenseOp(args.op)
        if args.compose:
            outer = TenseOp(args.compose)
            traj = compose(outer, op, p, f, family)
            display = f"({outer.value}*{op.value})({label})"
        else:
            traj = apply_tense(op, p, f, family)
            display = f"{op.value}({label})"
    except (TensePosetError, ValueError) as exc:
        _print(out, f"error: {exc}")
        return 1
    if args.format == "json":
        _print(out, json.dumps(
            {"op": args.op, "compose": args.compose, "family": label,
             "points": [str(lab) for lab in f.labels],
             "slices": [[str(p.labels[i]) for i in bits(mask)] for mask in traj]},
            indent=2))
    else:
        body = ", ".join(_slice_text(p, mask) for mask in traj)
        _print(out, f"{display} = [{body}]")
    return 0


def _report_lines(rep: Report):
    lines = [f"suite {rep.name}"]
    for label, ok, detail in rep.entries:
        mark = "ok  " if ok else "FAIL"
        parts = detail.split("\n") if detail else []
        head = f"  {mark} {label}"
        if parts:
            head += f": {parts[0]}"
        lines.append(head)
        for extra in parts[1:]:
            lines.append("         " + extra)
    lines.append(f"  {'PASS' if rep.ok else 'FAIL'} {rep.name}")
    return lines


def cmd_verify(args, out) -> int:
    inst = None
    if args.input:
        try:
            inst = _load(args.input)
        except LOAD_ERRORS as exc:
            _print(out, f"parse error: {exc}")
            return 2
        except TensePosetError as exc:
            _print(out, f"invalid: {type(exc).__name__}: {exc}")
            return 1
    ctx = SuiteContext(seed=args.seed, cases=args.cases, instance=inst,
                       enum_cap=args.enum_cap, phi_cap=args.phi_cap)
    if args.suite == "all":
        results = run_all(ctx)
    else:
        results = [(args.suite, run_suite(args.suite, ctx))]
    ok = all(rep.ok for _, rep in results)
    if args.format == "json":
        doc = {"seed": args.seed, "cases": args.cases, "ok": ok, "suites": []}
        for name, rep in results:
            doc["suites"].append({
                "name": name, "ok": rep.ok,
                "properties": [{"name": label, "ok": entry_ok, "detail": detail}
                               for label, entry_ok, detail in rep.entries]})
        _print(out, json.dumps(doc, indent=2))
    else:
        _print(out, f"verify seed={args.seed} cases={args.cases}")
        for _, rep in results:
            for line in _report_lines(rep):
                _print(out, line)
        _print(out, f"result {'PASS' if ok else 'FAIL'} "
                    f"({len(results)} suite{'s' if len(results) != 1 else ''})")
    return 0 if ok else 1


def cmd_export(args, out) -> int:
    try:
        inst = _load(args.input)
    except LOAD_ERRORS as exc:
        _print(out, f"parse error: {exc}")
        return 2
    except TensePosetError as exc:
        _print(out, f"invalid: {type(exc).__name__}: {exc}")
        return 1
    out.write(dsl.to_json_text(inst))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tenseposet",
        description="Tense operators on finite bounded posets: validate "
                    "instances, evaluate operators, verify the law suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("check", help="validate every structure in a file")
    pc.add_argument("input")
    pc.add_argument("--format", choices=("text", "json"), default="text")
    pc.set_defaults(func=cmd_check)

    pt = sub.add_parser("tense", help="evaluate a tense operator on a family")
    pt.add_argument("input")
    pt.add_argument("--op", required=True, choices=[o.value for o in TenseOp])
    pt.add_argument("--compose", choices=[o.value for o in TenseOp],
                    help="outer operator of a composition")
    pt.add_argument("--family", required=True,
                    help="family name, prop name, or {p,q,...}")
    pt.add_argument("--poset", help="poset name when the file has several")
    pt.add_argument("--frame", help="frame name when the file has several")
    pt.add_argument("--format", choices=("text", "json"), default="text")
    pt.set_defaults(func=cmd_tense)

    pv = sub.add_parser("verify", help="run a named verification suite")
    pv.add_argument("input", nargs="?",
                    help="optional instance file folded into the suites")
    pv.add_argument("--suite", default="all", choices=SUITE_ORDER + ["all"])
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--cases", type=int, default=200)
    pv.add_argument("--enum-cap", type=int,
                    default=_env_int("TENSEPOSET_ENUM_CAP", ENUM_CAP))
    pv.add_argument("--phi-cap", type=int,
                    default=_env_int("TENSEPOSET_PHI_CAP", PHI_CAP))
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("export", help="emit the JSON mirror of a file")
    pe.add_argument("input")
    pe.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
