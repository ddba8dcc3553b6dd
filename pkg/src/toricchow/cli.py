"""Command-line interface.

Exit codes: 0 success, 1 mathematical or hypothesis failure, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .fan import FanError, HatFanError, has_torus_factor, is_smooth, validate_fan
from .io import FIXTURES, InputDocument, InputError, fixture
from .present import (ParseError, Presentation, from_json_doc, graded_invariants, parse_relations,
                      parse_ring, render, simplify, to_json_doc, variable_names)
from .present.render import FORMATS, render_latex
from .stacky import (HypothesisError, StackyFan, chow_ring, cokernel_is_finite, cox_report,
                     fantastack_fan, split_infinite, stanley_reisner, validate_hypotheses)

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


def _pipeline(doc: InputDocument, check_fan: bool) -> tuple[StackyFan, Presentation]:
    if doc.mode == "fantastack":
        fan, images = doc.fantastack_data()
        sf = fantastack_fan(fan, images)
        if not cokernel_is_finite(sf):
            raise HypothesisError("beta must have finite cokernel for a fantastack")
        return sf, stanley_reisner(sf, check_fan=check_fan)
    sf = doc.stacky_fan()
    return sf, chow_ring(sf, check_fan=check_fan)


def cmd_check(args) -> int:
    doc = InputDocument.load(args.file)
    lines = []
    if doc.mode == "fantastack":
        fan, images = doc.fantastack_data()
        target_report = validate_fan(fan)
        lines.append(f"target fan: {target_report}")
        if not target_report.ok:
            print("\n".join(lines + ["hypotheses: FAILED"]))
            return EXIT_MATH
        try:
            sf = fantastack_fan(fan, images)
        except HatFanError as exc:
            print("\n".join(lines + [f"hat fan: {exc}", "hypotheses: FAILED"]))
            return EXIT_MATH
        lines.append(f"hat fan: max cones {[sorted(c) for c in sf.fan.max_cones]}")
    else:
        sf = doc.stacky_fan()
    ok = True
    if args.skip_fan_check:
        lines.append("fan: not checked")
    else:
        report = validate_fan(sf.fan)
        lines.append(f"fan: {report}")
        ok = report.ok
    if ok:
        hyp = validate_hypotheses(sf, check_fan=False)
        lines.append(f"smooth: {'yes' if is_smooth(sf.fan) else 'no'}")
        lines.append(f"torus factor: {'yes' if has_torus_factor(sf.fan) else 'no'}")
        lines.extend(v for v in hyp.violations)
        ok = hyp.ok
    finite = cokernel_is_finite(sf)
    if finite:
        lines.append("cokernel of beta: finite")
    else:
        lines.append(f"cokernel of beta: infinite (rk N0 = {split_infinite(sf)[0]})")
        if doc.mode == "fantastack":
            ok = False
    if args.verbose:
        lines.append(f"normalized lift: {sf.normalized_lift().to_list()}")
    lines.append(f"hypotheses: {'OK' if ok else 'FAILED'}")
    print("\n".join(lines))
    return EXIT_OK if ok else EXIT_MATH


def _emit(p: Presentation, sf: StackyFan, args) -> None:
    table = graded_invariants(p, args.graded) if args.graded is not None else None
    cox = cox_report(sf)
    if args.format == "json":
        out = {"presentation": to_json_doc(p), "simplified": bool(args.simplify)}
        if table is not None:
            out["graded"] = table.to_list()
        out["cox"] = {
            "matrix": cox.matrix.to_list(),
            "character_group": {"rank": cox.character_group.rank,
                                "torsion": list(cox.character_group.torsion)},
            "weights": cox.weights.to_list(),
        }
        if args.verbose:
            out["normalized_lift"] = sf.normalized_lift().to_list()
        print(json.dumps(out, indent=2))
        return
    comment = "% " if args.format == "latex" else ""
    print(render_latex(p) if args.format == "latex" else render(p, "text"))
    if table is not None:
        print("\n".join(comment + line for line in table.lines()))
    print("\n".join(comment + line for line in cox.lines()))
    if args.verbose:
        print(f"{comment}normalized lift: {sf.normalized_lift().to_list()}")


def cmd_chow(args) -> int:
    doc = InputDocument.load(args.file)
    sf, p = _pipeline(doc, not args.skip_fan_check)
    if args.simplify:
        p = simplify(p)
    _emit(p, sf, args)
    return EXIT_OK


def cmd_fantastack(args) -> int:
    doc = InputDocument.load(args.file)
    if doc.mode != "fantastack":
        raise InputError("fantastack needs a document with \"mode\": \"fantastack\"")
    return cmd_chow(args)


def _load_target(source: str, names: str | None) -> Presentation:
    path = Path(source)
    text = source
    if len(source) < 4096 and path.is_file():
        text = path.read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            try:
                return from_json_doc(json.loads(text))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise InputError(f"{source}: bad target document ({exc})") from None
    stripped = text.strip()
    if stripped[:1] in ("Z", "ℤ", "\\") and "[" in stripped.split("(")[0]:
        return parse_ring(stripped)
    var_list = [v.strip() for v in names.split(",") if v.strip()] if names else variable_names(text)
    return Presentation(tuple(var_list), (), tuple(parse_relations(text, var_list)))


def cmd_compare(args) -> int:
    doc = InputDocument.load(args.file)
    target = _load_target(args.target, args.vars)
    _, p = _pipeline(doc, not args.skip_fan_check)
    if args.simplify:
        p = simplify(p)
    left = graded_invariants(p, args.max_degree)
    right = graded_invariants(target, args.max_degree)
    print(f"input:  {render(p)}")
    print(f"target: {render(target)}")
    width = max(len(line) for line in left.lines())
    for a, b in zip(left.lines(), right.lines()):
        print(f"  {a:<{width}}  |  {b}")
    bad = [k for k in range(args.max_degree + 1) if left[k] != right[k]]
    if bad:
        print(f"FAIL at degree {bad[0]}")
        return EXIT_MATH
    print(f"PASS (graded invariants agree through degree {args.max_degree})")
    return EXIT_OK


def cmd_examples(args) -> int:
    try:
        doc = fixture(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    if args.output:
        Path(args.output).write_text(doc.dumps(), encoding="utf-8")
    else:
        sys.stdout.write(doc.dumps())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricchow",
        description="Integral Chow rings of smooth non-strict toric stacks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, render_flags=True):
        p.add_argument("file", help="input JSON document")
        p.add_argument("--skip-fan-check", action="store_true",
                       help="skip the fan validity check (unsafe on untrusted input)")
        p.add_argument("--verbose", action="store_true")
        if render_flags:
            p.add_argument("--simplify", action="store_true", help="eliminate variables where possible")
            p.add_argument("--graded", type=int, metavar="D", help="print graded invariants up to degree D")
            p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("check", help="check the hypotheses of the Chow ring formula")
    common(p, render_flags=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("chow", help="print the Chow ring presentation")
    common(p)
    p.set_defaults(func=cmd_chow)

    p = sub.add_parser("fantastack", help="Chow ring of a fantastack document")
    common(p)
    p.set_defaults(func=cmd_fantastack)

    p = sub.add_parser("compare", help="compare graded invariants with a target ring")
    common(p, render_flags=False)
    p.add_argument("--target", required=True,
                   help="relations, a ring like 'Z[s,t]/(2*t)', or a file holding either (or JSON)")
    p.add_argument("--vars", help="comma-separated target variable names (default: order of appearance)")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--simplify", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("examples", help="write a bundled example document")
    p.add_argument("name", help=f"one of {', '.join(sorted(FIXTURES))}")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (HypothesisError, HatFanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (InputError, FanError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
