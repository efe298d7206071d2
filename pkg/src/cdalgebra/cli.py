"""Command-line surface: arithmetic, solvers, classification, and scans.

Exit codes: 0 on success, 1 when a solver reports an empty solution set
(the set is still printed), 2 on usage or parse errors.
"""

from __future__ import annotations

import contextlib
import json
import sys
from typing import Optional

from . import laws, solvers
from .core import (EXACT, FLOAT, Element, embed, norm, norm_sq, re,
                   scalar_to_str, structure_table, to_float)
from .oracle import zero_divisor_search
from .parser import ParseError, eval_expression, parse_element
from .solvers import VerificationError


def build_parser():
    import argparse

    ap = argparse.ArgumentParser(
        prog="cdalg",
        description="Cayley-Dickson algebra toolkit: arithmetic, similarity and "
                    "consimilarity solvers, square roots, and identity scans.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("--output", choices=("text", "json"), default="text")

    def add_backend(p):
        p.add_argument("--backend", choices=(EXACT, FLOAT), default=None)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--level", type=int, default=None)
    add_backend(p)
    add_common(p)

    p = sub.add_parser("table", help="signed basis multiplication table")
    p.add_argument("--level", type=int, required=True)
    add_common(p)

    for verb, hlp in (("solve-sim", "solve ax = xb"),
                      ("solve-consim", "solve ax = conj(x) b"),
                      ("solve-conj-transform", "solve conj(x) a x = b"),
                      ("solve-xax", "solve x a x = b")):
        p = sub.add_parser(verb, help=hlp)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--level", type=int, default=None)
        add_backend(p)
        add_common(p)

    p = sub.add_parser("sqrt", help="square roots of an element")
    p.add_argument("--a", required=True)
    p.add_argument("--level", type=int, default=None)
    add_backend(p)
    add_common(p)

    p = sub.add_parser("root", help="m-th roots of a non-real element")
    p.add_argument("--a", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--level", type=int, default=None)
    add_backend(p)
    add_common(p)

    p = sub.add_parser("classify", help="similarity/consimilarity invariants")
    p.add_argument("--a", required=True)
    p.add_argument("--level", type=int, default=None)
    add_backend(p)
    add_common(p)

    p = sub.add_parser("identity-scan", help="law/level verdict matrix")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    p = sub.add_parser("span-experiment", help="pair-span vs oracle-kernel tally")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    p = sub.add_parser("zero-divisors", help="search for nonzero a, x with ax = 0")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)

    return ap


def _coerce_backend(e: Element, backend: Optional[str]) -> Element:
    if backend == FLOAT and e.backend == EXACT:
        return to_float(e)
    if backend == EXACT and e.backend == FLOAT:
        raise ValueError("decimal literals force the float backend")
    return e


def _parse_one(text: str, level: Optional[int], backend: Optional[str]) -> Element:
    return _coerce_backend(parse_element(text, level), backend)


def _parse_pair(atext: str, btext: str, level: Optional[int],
                backend: Optional[str]) -> tuple[Element, Element]:
    a = parse_element(atext, level)
    b = parse_element(btext, level)
    lvl = max(a.level, b.level) if level is None else level
    a, b = embed(a, lvl), embed(b, lvl)
    if a.backend != b.backend:  # one literal was decimal: promote both to float
        a, b = to_float(a), to_float(b)
    return _coerce_backend(a, backend), _coerce_backend(b, backend)


def _print_solution(sol, args) -> int:
    if args.output == "json":
        print(json.dumps(sol.to_json_dict()))
    else:
        print(f"variant: {sol.variant}  [{sol.level_semantics}, {sol.completeness}]")
        if sol.note:
            print(f"note: {sol.note}")
        if sol.variant == solvers.MODULE:
            print(f"map: x = (L) p + p (R) with L = {sol.module_left}, R = {sol.module_right}")
            dom = "full algebra" if sol.domain is None else \
                "; ".join(str(e) for e in sol.domain)
            print(f"parameter domain: {dom}")
        reps = sol.representatives()
        if reps:
            print("representatives:")
            for r in reps:
                print(f"  {r}")
    return 1 if sol.is_empty else 0


def _run(argv) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    verb = args.verb
    if verb == "eval":
        value = eval_expression(args.expr, args.level, args.backend)
        if args.output == "json":
            d = value.to_json_dict()
            d["text"] = str(value)
            print(json.dumps(d))
        else:
            print(value)
        return 0

    if verb == "table":
        table = structure_table(args.level)
        if args.output == "json":
            print(json.dumps(table.to_json_dict()))
        else:
            width = len(f"-e{(1 << args.level) - 1}")
            for row in table.entries:
                cells = [("-" if s < 0 else "") + f"e{k}" for s, k in row]
                print(" ".join(c.rjust(width) for c in cells))
        return 0

    if verb in ("solve-sim", "solve-consim", "solve-conj-transform", "solve-xax"):
        a, b = _parse_pair(args.a, args.b, args.level, args.backend)
        fn = {"solve-sim": solvers.solve_sim,
              "solve-consim": solvers.solve_consim,
              "solve-conj-transform": solvers.solve_conj_transform,
              "solve-xax": solvers.solve_xax}[verb]
        return _print_solution(fn(a, b), args)

    if verb == "sqrt":
        a = _parse_one(args.a, args.level, args.backend)
        return _print_solution(solvers.sqrt(a), args)

    if verb == "root":
        a = _parse_one(args.a, args.level, args.backend)
        return _print_solution(solvers.nth_root(a, args.m), args)

    if verb == "classify":
        a = _parse_one(args.a, args.level, args.backend)
        cls = solvers.similarity_class(a)
        d = {"level": a.level,
             "re": scalar_to_str(re(a)),
             "im_norm_sq": scalar_to_str(cls.im_norm_sq),
             "im_norm": cls.im_norm,
             "norm_sq": scalar_to_str(norm_sq(a)),
             "norm": norm(a),
             "is_real": a.is_real()}
        if not a.is_real():
            d["canonical"] = str(solvers.canonical_form(a)[0])
        if args.output == "json":
            print(json.dumps(d))
        else:
            for k, v in d.items():
                print(f"{k}: {v}")
        return 0

    if verb == "identity-scan":
        reports = laws.scan_level(args.level, args.trials, args.seed)
        if args.output == "json":
            for r in reports:
                print(r.to_json())
        else:
            for r in reports:
                line = f"{r.law:<22} {r.verdict}  ({r.trials} checks)"
                if r.counterexample:
                    wits = ", ".join(str(w) for w in r.counterexample.witness)
                    line += f"  witness: {wits}"
                print(line)
        return 0

    if verb == "span-experiment":
        report = laws.span_experiment(args.level, args.trials, args.seed)
        if args.output == "json":
            print(json.dumps(report.to_json_dict()))
        else:
            for line in report.csv_lines():
                print(line)
        return 0

    if verb == "zero-divisors":
        found = zero_divisor_search(args.level, args.budget, args.seed)
        if args.output == "json":
            d = {"level": args.level, "found": found is not None}
            if found:
                d["a"], d["x"] = found[0].to_json_dict(), found[1].to_json_dict()
            print(json.dumps(d))
        else:
            if found:
                print(f"({found[0]}) * ({found[1]}) = 0")
            else:
                print("no zero divisors found (division algebra at this level)" if args.level <= 3
                      else "no zero divisors found within the search budget")
        return 0

    raise AssertionError(f"unhandled verb {verb}")  # pragma: no cover


def run_command(argv, stdout=None, stderr=None) -> int:
    """Dispatch one CLI invocation; returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            return _run(argv)
        except (ParseError, ValueError, ZeroDivisionError, VerificationError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2


def main() -> None:  # pragma: no cover
    sys.exit(run_command(sys.argv[1:]))
