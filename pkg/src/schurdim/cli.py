"""Command-line interface: ``schurdim <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error.  All output goes to stdout and is deterministic.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys

from . import blocks, characters, filtrations, homdim, verify
from .weights import GlPartition, SlWeight, steinberg_depth, to_sl_weight

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _weight(coords: tuple[int, ...], n: int | None) -> SlWeight:
    if n is not None and len(coords) != n - 1:
        raise UsageError(f"an SL_{n} weight needs {n - 1} coordinate(s), got {len(coords)}")
    w = SlWeight(coords)
    if not w.is_dominant:
        raise UsageError(f"weight {w} is not dominant")
    return w


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("glob", help="global dimension of S(n,r) or S_q(2,r)")
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--quantum", action="store_true")
    g.add_argument("--l", type=int)

    g = sub.add_parser("gfd", help="good filtration dimension of a simple module")
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--p", type=int, required=True)
    which = g.add_mutually_exclusive_group(required=True)
    which.add_argument("--weight", type=_ints)
    which.add_argument("--partition", type=_ints)

    g = sub.add_parser("char", help="character of nabla, L or nabla_p")
    g.add_argument("--kind", choices=("nabla", "simple", "nabla-p"), required=True)
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--weight", type=_ints, required=True)

    g = sub.add_parser("pfilt", help="p-filtration of nabla(weight)")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--weight", type=_ints, required=True)
    g.add_argument("--format", choices=("json", "dot", "text"), default="json")

    g = sub.add_parser("tensor", help="decompose nabla(left) (x) nabla(right)")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--left", type=_ints, required=True)
    g.add_argument("--right", type=_ints, required=True)

    g = sub.add_parser("blocks", help="linkage class of a weight")
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--weight", type=_ints, required=True)
    g.add_argument("--box", type=int)

    g = sub.add_parser("table", help="closed form against brute force, one row per r")
    g.add_argument("--n", type=int, choices=(2, 3), required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--rmax", type=int, required=True)
    g.add_argument("--format", choices=("csv",), default="csv")

    g = sub.add_parser("verify", help="run a verification suite")
    g.add_argument("--suite", choices=verify.SUITES, required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--bound", type=int)
    return parser


def _require_prime(p):
    if p is None or not homdim.is_prime(p):
        raise UsageError(f"--p must be a prime, got {p}")


def cmd_glob(args, out) -> int:
    _require_prime(args.p)
    if args.r < 0:
        raise UsageError("--r must be nonnegative")
    if args.quantum:
        if args.n != 2:
            raise UsageError("--quantum is only available for n=2")
        if args.l is None or args.l < 2:
            raise UsageError("--quantum needs --l L with L >= 2")
        report = homdim.gfd_schur_q2(args.r, args.l, args.p)
        closed = homdim.glob_schur_q2(args.r, args.l, args.p)
    else:
        if args.l is not None:
            raise UsageError("--l only makes sense with --quantum")
        report = homdim.gfd_schur(args.n, args.r, args.p)
        closed = homdim.glob_schur_formula(args.n, args.r, args.p)
    out.write(_dump(report.to_json()))
    return EXIT_OK if closed == report.glob else EXIT_FAIL


def cmd_gfd(args, out) -> int:
    _require_prime(args.p)
    detail: dict = {"n": args.n, "p": args.p}
    if args.partition is not None:
        if len(args.partition) != args.n:
            raise UsageError(f"--partition needs {args.n} parts")
        try:
            part = GlPartition(args.partition)
        except ValueError as exc:
            raise UsageError(str(exc))
        lam = to_sl_weight(part)
        value = homdim.gfd_simple_schur(part, args.p)
        detail["partition"] = list(part.parts)
    else:
        lam = _weight(args.weight, args.n)
        value = homdim.gfd_simple(lam, args.p)
    d, core = steinberg_depth(lam, args.p)
    detail.update(weight=list(lam), steinberg_depth=d, primitive_core=list(core), gfd=value)
    out.write(_dump(detail))
    return EXIT_OK


def cmd_char(args, out) -> int:
    lam = _weight(args.weight, args.n)
    if args.kind == "nabla":
        c = characters.weyl_character(lam)
    else:
        _require_prime(args.p)
        fn = characters.simple_character if args.kind == "simple" else characters.nabla_p_character
        c = fn(lam, args.p)
    out.write(_dump(c.to_json()))
    return EXIT_OK


def cmd_pfilt(args, out) -> int:
    _require_prime(args.p)
    f = filtrations.p_filtration(_weight(args.weight, args.n), args.p)
    if args.format == "json":
        out.write(_dump(f.to_json()))
    elif args.format == "dot":
        out.write(f.to_dot())
    else:
        out.write(f.to_text())
    return EXIT_OK


def _mults_json(mults) -> list:
    return [list(w) + [m] for w, m in mults.items()]


def cmd_tensor(args, out) -> int:
    _require_prime(args.p)
    if len(args.left) != len(args.right):
        raise UsageError("--left and --right must have the same number of coordinates")
    left, right = _weight(args.left, None), _weight(args.right, None)
    prod = characters.tensor(characters.weyl_character(left), characters.weyl_character(right))
    out.write(_dump({
        "left": list(left),
        "right": list(right),
        "p": args.p,
        "good": _mults_json(characters.decompose_good(prod)),
        "simple": _mults_json(characters.decompose_simples(prod, args.p)),
    }))
    return EXIT_OK


def cmd_blocks(args, out) -> int:
    _require_prime(args.p)
    lam = _weight(args.weight, args.n)
    if args.box is not None and args.box < max(lam):
        raise UsageError(f"--box {args.box} does not contain {lam}")
    out.write(_dump(blocks.linkage_class(lam, args.p, box=args.box).to_json()))
    return EXIT_OK


def cmd_table(args, out) -> int:
    _require_prime(args.p)
    if args.rmax < 0:
        raise UsageError("--rmax must be nonnegative")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "p", "r", "glob_formula", "glob_bruteforce", "match"])
    all_ok = True
    for r in range(args.rmax + 1):
        closed = homdim.glob_schur_formula(args.n, r, args.p)
        brute = homdim.gfd_schur(args.n, r, args.p).glob
        all_ok &= closed == brute
        w.writerow([args.n, args.p, r, closed, brute, str(closed == brute).lower()])
    out.write(buf.getvalue())
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.p is not None:
        _require_prime(args.p)
    if args.bound is not None and args.bound < 0:
        raise UsageError("--bound must be nonnegative")
    res = verify.run_suite(args.suite, p=args.p, bound=args.bound)
    out.write(_dump(res.to_json()))
    return EXIT_OK if res.passed else EXIT_FAIL


COMMANDS = {
    "glob": cmd_glob,
    "gfd": cmd_gfd,
    "char": cmd_char,
    "pfilt": cmd_pfilt,
    "tensor": cmd_tensor,
    "blocks": cmd_blocks,
    "table": cmd_table,
    "verify": cmd_verify,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"schurdim {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())
