"""Command-line entry point: ``rainbowcycles <command> ...``.

Exit codes: 0 success, 1 verification or suite failure, 2 bad usage, bad
input or unmet precondition, 3 a proved bound failed (a bug).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .errors import InvalidGraphError, PreconditionError, TheoremViolation
from .formats import FormatError, parse_cert, parse_dgr, parse_ecg, write_cert, write_dgr, write_ecg
from .graph import Digraph, EdgeColouredGraph, validate_certificate
from .harness import CHECKS, SUITES, default_jobs, hunt, run_suite, witness_text
from .instances import SHAPES, balanced_three_colouring, circulant_digraph, from_digraph, random_digraph, random_instance
from .oracle import default_cap, directed_girth, girth_exact, rainbow_girth_exact
from .r3 import solve

OK, FAILED, USAGE, FAULT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from exc


def read_instance(path: str):
    """Parse an ECG or DGR file, picking the grammar from the header keyword."""
    text = _read(path)
    first = next((ln for ln in text.split("\n") if ln and not ln.startswith("#")), "")
    if first.startswith("dgr"):
        return parse_dgr(text)
    return parse_ecg(text)


def _read_ecg(path: str) -> EdgeColouredGraph:
    inst = read_instance(path)
    if isinstance(inst, Digraph):
        raise UsageError(f"{path}: expected an edge-coloured graph (ecg), got a digraph")
    return inst


def cmd_find_cycle(args) -> int:
    G = _read_ecg(args.input)
    try:
        sol = solve(G)
    except TheoremViolation as exc:
        sys.stderr.write(f"FAULT: {exc}\n")
        if isinstance(exc.instance, EdgeColouredGraph):
            sys.stderr.write(write_ecg(exc.instance))
        return FAULT
    C = sol.certificate
    comments = [
        f"branch {sol.branch}",
        f"n {G.n} length {C.length} limit {(4 * G.n + 63) // 9}",
        "colours " + " ".join(map(str, C.colours(G))),
    ]
    _emit(write_cert(C, comments), args.out)
    return OK


def cmd_girth(args) -> int:
    inst = read_instance(args.input)
    if args.cap is not None and args.cap < 2:
        raise UsageError("--cap must be at least 2")
    if isinstance(inst, Digraph):
        cyc = directed_girth(inst)
        cap = args.cap if args.cap is not None else max(inst.n, 2)
        if cyc is None:
            _emit("infinite\n", args.out)
        elif len(cyc) > cap:
            _emit(f"none-within {cap}\n", args.out)
        else:
            lines = [f"finite {len(cyc)}"] + [f"a {u} {v}" for u, v in cyc]
            _emit("\n".join(lines) + "\n", args.out)
        return OK
    G = inst
    cap = args.cap if args.cap is not None else default_cap(G)
    if args.plain:
        C = girth_exact(G)
        if C is None:
            _emit("infinite\n", args.out)
            return OK
    else:
        C = rainbow_girth_exact(G, cap)
    if C is None or C.length > cap:
        _emit(f"none-within {cap}\n", args.out)
        return OK
    _emit(f"finite {C.length}\n" + write_cert(C, ["colours " + " ".join(map(str, C.colours(G)))]), args.out)
    return OK


def _jumps(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError as exc:
        raise UsageError(f"bad --jumps {text!r}") from exc


def cmd_gen(args) -> int:
    fam = args.family

    def need(*names):
        missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"--family {fam} needs " + ", ".join(missing))

    need("n")
    if args.format == "dgr" and fam not in ("digraph-circulant", "random-digraph"):
        raise UsageError("--format dgr only applies to digraph families")
    if fam == "thm218":
        inst = balanced_three_colouring(args.n)
    elif fam == "random":
        need("t", "r")
        inst = random_instance(
            args.n, args.t, args.r, args.seed, args.shape,
            r_min=args.r_min, purity=args.purity, simple=args.simple,
        )
    elif fam == "digraph-circulant":
        inst = circulant_digraph(args.n, _jumps(args.jumps))
    else:
        need("min_outdeg")
        inst = random_digraph(args.n, args.min_outdeg, args.seed, args.max_outdeg)
    if isinstance(inst, Digraph):
        text = write_dgr(inst) if args.format == "dgr" else write_ecg(from_digraph(inst))
    else:
        text = write_ecg(inst)
    _emit(text, args.out)
    return OK


def cmd_verify(args) -> int:
    G = _read_ecg(args.input)
    C = parse_cert(_read(args.cert))
    problem = validate_certificate(G, C)
    if problem is None:
        kind = "rainbow cycle" if C.rainbow else "cycle"
        _emit(f"ok {kind} of length {C.length}\n", None)
        return OK
    _emit(f"violation {problem}\n", None)
    return FAILED


def cmd_hunt(args) -> int:
    t = args.t if args.t is not None else args.n
    report = hunt(args.check, args.n, t, args.r, args.trials, args.seed, args.shape, args.simple, args.jobs)
    _emit(report.render(), args.out)
    if args.keep_witness:
        text = witness_text(report)
        if text is not None:
            _emit(text, args.keep_witness)
    return FAULT if report.faults else OK


def cmd_report(args) -> int:
    rows = run_suite(args.suite, args.seed, args.trials, args.jobs)
    lines = [f"suite {args.suite} seed={args.seed} trials={args.trials}"]
    lines += [row.render() for row in rows]
    failed = sum(not row.passed for row in rows)
    lines.append(f"{'FAIL' if failed else 'PASS'} {len(rows) - failed}/{len(rows)} rows")
    _emit("\n".join(lines) + "\n", args.out)
    return FAILED if failed else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rainbowcycles", description="Short rainbow cycles in edge-coloured graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_out(sp):
        sp.add_argument("--out", help="write here instead of standard output")
        return sp

    sp = with_out(sub.add_parser("find-cycle", help="rainbow cycle of length at most 4n/9 + 7"))
    sp.add_argument("--input", required=True)
    sp.set_defaults(func=cmd_find_cycle)

    sp = with_out(sub.add_parser("girth", help="exact rainbow (or plain, or directed) girth up to a cap"))
    sp.add_argument("--input", required=True)
    sp.add_argument("--cap", type=int, help="default: ceil(n / smallest class) + 2")
    sp.add_argument("--plain", action="store_true", help="ignore colours")
    sp.set_defaults(func=cmd_girth)

    sp = with_out(sub.add_parser("gen", help="write an instance file"))
    sp.add_argument("--family", required=True, choices=["thm218", "digraph-circulant", "random", "random-digraph"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--r-min", type=int)
    sp.add_argument("--shape", choices=SHAPES, default="uniform")
    sp.add_argument("--purity", type=int, default=100, help="percent of classes using --shape")
    sp.add_argument("--simple", action="store_true", help="no vertex pair in two classes")
    sp.add_argument("--jumps", default="1,2,3")
    sp.add_argument("--min-outdeg", type=int)
    sp.add_argument("--max-outdeg", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["ecg", "dgr"], default="ecg")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check a certificate against an instance")
    sp.add_argument("--input", required=True)
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = with_out(sub.add_parser("hunt", help="sample instances and check a girth bound"))
    sp.add_argument("--n", type=int, default=12)
    sp.add_argument("--t", type=int, help="number of colours (default n)")
    sp.add_argument("--r", type=int, default=3)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--shape", choices=SHAPES, default="uniform")
    sp.add_argument("--simple", action="store_true", help="no vertex pair in two classes")
    sp.add_argument("--check", choices=CHECKS, default="aharoni")
    sp.add_argument("--keep-witness", metavar="FILE", help="save the most interesting instance")
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.set_defaults(func=cmd_hunt)

    sp = with_out(sub.add_parser("report", help="run a property suite"))
    sp.add_argument("--suite", choices=sorted(SUITES), default="lemmas")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, PreconditionError, InvalidGraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE
    except TheoremViolation as exc:
        sys.stderr.write(f"FAULT: {exc}\n")
        return FAULT


if __name__ == "__main__":
    sys.exit(main())
