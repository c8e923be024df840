"""Command-line interface over the JSON formats in :mod:`kernexp.serialize`.

Exit codes: 0 ok, 1 parse or usage error, 2 web mismatch, 3 cross-check
disagreement, 4 guard exceeded, 5 property failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import serialize as ser
from . import verify
from .bang import BangContext, FormMismatch, bang_kernel, p_inf, pcoh_bang_mor
from .kernel import WebMismatch, compose
from .ortho import bipolar_check, in_polar, obj_bang, pairing
from .numeric import render
from .sym import (
    GuardExceeded,
    SymContext,
    barycenter_kernel,
    check_guard,
    eq_kernel,
    p_chain,
    p_step,
    sym_power,
)

OK, USAGE, SHAPE, DISAGREE, GUARD, PROPERTY = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ser.FormatError(f"{path}: invalid JSON ({exc.msg})") from exc


def _kernel_request(path: str, depth: Optional[int]):
    """A kernel file, or a ``{"kernel": ..., "depth": k}`` request."""
    data = _load(path)
    if isinstance(data, dict) and "kernel" in data:
        if depth is None:
            depth = data.get("depth")
        data = data["kernel"]
    if not isinstance(depth, int):
        raise UsageError("a depth is required (--depth or a 'depth' field)")
    return ser.kernel_from_json(data), depth


def _nonneg(name: str, value: Optional[int]) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < 0:
        raise UsageError(f"--{name} must be nonnegative")
    return value


def _emit(args, payload) -> None:
    text = ser.dumps(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# commands


def cmd_compose(args) -> int:
    first = ser.kernel_from_json(_load(args.first))
    second = ser.kernel_from_json(_load(args.second))
    _emit(args, ser.kernel_to_json(compose(second, first)))
    return OK


def cmd_bang(args) -> int:
    k, depth = _kernel_request(args.input, args.depth)
    check_guard(depth)
    out = bang_kernel(k, depth)
    if pcoh_bang_mor(k.transpose(), depth).transpose() != out:
        raise FormMismatch("kernel exponential disagrees with the multiset formula")
    _emit(args, ser.kernel_to_json(out))
    return OK


def cmd_pcoh_bang(args) -> int:
    t, depth = _kernel_request(args.input, args.depth)
    check_guard(depth)
    out = pcoh_bang_mor(t, depth)
    if bang_kernel(t.transpose(), depth).transpose() != out:
        raise FormMismatch("multiset formula disagrees with the kernel exponential")
    _emit(args, ser.kernel_to_json(out))
    return OK


def cmd_polar_check(args) -> int:
    obj = ser.object_from_json(_load(args.object))
    vec = ser.vector_from_json(_load(args.vector))
    if obj.web != vec.web:
        raise WebMismatch(f"object and vector webs differ: {obj.web!r} != {vec.web!r}", obj.web, vec.web)
    report: dict = {"mode": args.mode}
    if args.mode == "polar":
        report["member"] = in_polar(obj.generators, vec)
        report["pairings"] = [render(pairing(u, vec)) for u in obj.generators]
    else:
        v = bipolar_check(obj.generators, vec)
        report["member"] = v.member
        report["sup"] = None if v.sup is None else render(v.sup)
        if v.witness is not None:
            report["witness"] = ser.vector_to_json(v.witness)
    _emit(args, report)
    return OK


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in verify.SUITES:
        known = ", ".join(["all", *verify.SUITES])
        raise UsageError(f"unknown suite {args.suite!r}; known suites: {known}")
    if args.count is not None and args.count < 1:
        raise UsageError("--count must be positive")
    outcomes = verify.run(args.suite, args.seed, args.count)
    failed = [o.name for o in outcomes if not o.passed]
    _emit(
        args,
        {
            "suite": args.suite,
            "seed": args.seed,
            "count": args.count,
            "passed": not failed,
            "results": [{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes],
        },
    )
    if failed:
        print("failing properties: " + "; ".join(failed), file=sys.stderr)
        return PROPERTY
    return OK


def cmd_construct(args) -> int:
    if args.what == "sym-power":
        k = ser.kernel_from_json(_load(args.input))
        out = sym_power(k, _nonneg("grade", args.grade))
        _emit(args, ser.kernel_to_json(out))
        return OK
    base = ser.web_from_json(_load(args.input))
    n = _nonneg("grade", args.grade)
    check_guard(n)
    if args.what == "eq":
        out = eq_kernel(SymContext(base, n))
    elif args.what == "barycenter":
        out = barycenter_kernel(base, n)
    elif args.what == "p-step":
        out = p_step(base, n).underlying
    elif args.what == "p-chain":
        k = _nonneg("to", args.to)
        if k > n:
            raise UsageError("--to must not exceed --grade")
        out = p_chain(base, n, k).underlying
    else:  # p-inf
        depth = _nonneg("depth", args.depth)
        if n > depth:
            raise UsageError("--grade must not exceed --depth")
        out = p_inf(BangContext(base, depth), n).underlying
    _emit(args, ser.kernel_to_json(out))
    return OK


def cmd_bang_object(args) -> int:
    obj = ser.object_from_json(_load(args.object))
    depth = _nonneg("depth", args.depth)
    gb = _nonneg("gen-bound", args.gen_bound)
    if gb < 1:
        raise UsageError("--gen-bound must be at least 1")
    check_guard(depth)
    _emit(args, ser.object_to_json(obj_bang(obj, depth, gb)))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kernexp", description="Exact kernels, exponentials and orthogonality checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def out_flag(sp):
        sp.add_argument("--out", help="write the JSON result here instead of stdout")

    sp = sub.add_parser("compose", help="compose two kernels (FIRST then SECOND)")
    sp.add_argument("first")
    sp.add_argument("second")
    out_flag(sp)
    sp.set_defaults(run=cmd_compose)

    for name, fn, text in (
        ("bang", cmd_bang, "truncated exponential of a kernel"),
        ("pcoh-bang", cmd_pcoh_bang, "multiset-matrix exponential of a matrix"),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("input", help="kernel JSON or request file, '-' for stdin")
        sp.add_argument("--depth", type=int)
        out_flag(sp)
        sp.set_defaults(run=fn)

    sp = sub.add_parser("polar-check", help="polar or bipolar membership of a vector")
    sp.add_argument("object")
    sp.add_argument("vector")
    sp.add_argument("--mode", choices=("polar", "bipolar"), default="bipolar")
    out_flag(sp)
    sp.set_defaults(run=cmd_polar_check)

    sp = sub.add_parser("verify", help="run a seeded property suite")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, help="instance count override")
    out_flag(sp)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("construct", help="build a structural kernel")
    sp.add_argument("what", choices=("eq", "barycenter", "p-step", "p-chain", "p-inf", "sym-power"))
    sp.add_argument("input", help="web JSON (kernel JSON for sym-power), '-' for stdin")
    sp.add_argument("--grade", type=int)
    sp.add_argument("--to", type=int, help="target grade for p-chain")
    sp.add_argument("--depth", type=int)
    out_flag(sp)
    sp.set_defaults(run=cmd_construct)

    sp = sub.add_parser("bang-object", help="generators of the truncated exponential object")
    sp.add_argument("object")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--gen-bound", type=int, default=2)
    out_flag(sp)
    sp.set_defaults(run=cmd_bang_object)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ser.FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return USAGE
    except GuardExceeded as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return GUARD
    except WebMismatch as exc:
        print(f"shape mismatch: {exc}", file=sys.stderr)
        return SHAPE
    except FormMismatch as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return DISAGREE


if __name__ == "__main__":
    sys.exit(main())
