"""Command line front end.

    resforge symbol --p 7 --n 2 7 7
    resforge symbol --p 13 --n 3 --method all --format json 2 13
    resforge verify theorem --p 7
    resforge verify all --seed 42 --format json
    resforge table --p 5 --n 4 --vmax 1 --format csv

Flags fall back to environment variables RESFORGE_P, RESFORGE_F,
RESFORGE_N, RESFORGE_PRECISION, RESFORGE_SEED, RESFORGE_FORMAT,
RESFORGE_BOUND.  Exit status is 0 on success, 1 on verification
failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import EnumerationBound, PrecisionError
from .extension import corrected_symbol, get_engine
from .fields import MuScalar
from .padic import LocalField
from .symbols import (crosscheck, delta_route_symbol, power_residue_symbol,
                      symbol_value_str)
from .verify import run_suite


def _env(name, cast, default):
    raw = os.environ.get(f"RESFORGE_{name}")
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise SystemExit(f"bad RESFORGE_{name}={raw!r}")


def _add_field_args(sub):
    sub.add_argument("--p", type=int, default=_env("P", int, None),
                     help="residue characteristic (prime)")
    sub.add_argument("--f", type=int, default=_env("F", int, 1),
                     help="residue degree (default 1)")
    sub.add_argument("--n", type=int, default=_env("N", int, None),
                     help="order of the root-of-unity group, dividing q - 1")
    sub.add_argument("--precision", type=int,
                     default=_env("PRECISION", int, None),
                     help="working pi-adic precision")
    sub.add_argument("--bound", type=int, default=_env("BOUND", int, 100_000),
                     help="enumeration bound for finite modules")
    sub.add_argument("--format", choices=("human", "json", "csv"),
                     default=_env("FORMAT", str, "human"))


def _field(args) -> LocalField:
    if args.p is None:
        raise SystemExit("--p is required (or set RESFORGE_P)")
    kw = {"enum_bound": args.bound}
    if args.precision:
        kw["default_precision"] = args.precision
    return LocalField(args.p, args.f, **kw)


def _cmd_symbol(args) -> int:
    lf = _field(args)
    if args.n is None:
        raise SystemExit("--n is required (or set RESFORGE_N)")
    try:
        a = lf.parse(args.a)
        b = lf.parse(args.b)
    except (ValueError, PrecisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.method == "all":
            rep = crosscheck(lf, a, b, args.n)
            if args.format == "json":
                print(rep.to_json())
            else:
                val = symbol_value_str(lf, MuScalar(args.n, rep.direct))
                print(f"({args.a}, {args.b})_{args.n} over Q_{args.p}"
                      + (f"^{args.f}" if args.f > 1 else ""))
                print(f"  direct:    zeta^{rep.direct} = {val}")
                print(f"  muset:     zeta^{rep.muset}")
                print(f"  extension: zeta^{rep.extension}")
                print(f"  agree: {rep.agree}   ({rep.micros} us)")
            return 0 if rep.agree else 1
        if args.method == "direct":
            s = power_residue_symbol(lf, a, b, args.n)
        elif args.method == "muset":
            s = delta_route_symbol(lf, a, b, args.n)
        else:
            s = corrected_symbol(a, b, get_engine(lf, args.n))
        if args.format == "json":
            print(json.dumps({"p": args.p, "f": args.f, "n": args.n,
                              "a": args.a, "b": args.b,
                              "method": args.method, "exp": s.exp,
                              "value": symbol_value_str(lf, s)}))
        else:
            print(f"zeta^{s.exp} = {symbol_value_str(lf, s)}")
        return 0
    except (ValueError, PrecisionError, EnumerationBound) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_verify(args) -> int:
    kw = {"seed": args.seed}
    if args.p:
        kw["ps"] = tuple(args.p)
    result = run_suite(args.suite, **kw)
    if args.format == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        rows = result["suites"] if args.suite == "all" else [result]
        for r in rows:
            for c in r["checks"]:
                status = "PASS" if c["failures"] == 0 else "FAIL"
                print(f"{status}  {r['suite']}.{c['name']}: "
                      f"{c['cases'] - c['failures']}/{c['cases']}")
                if c["failures"]:
                    print(f"      first counterexample: "
                          f"{json.dumps(c['first_counterexample'])}")
        print("OK" if result["ok"] else "FAILED")
    return 0 if result["ok"] else 1


def _cmd_table(args) -> int:
    lf = _field(args)
    if args.n is None:
        raise SystemExit("--n is required (or set RESFORGE_N)")
    units = range(1, lf.p) if lf.f == 1 else range(1, lf.q)
    vals = range(-args.vmax, args.vmax + 1)
    side = (lf.q - 1) * (2 * args.vmax + 1)
    if side * side > args.max_entries:
        print(f"error: grid of {side * side} entries exceeds "
              f"--max-entries {args.max_entries}", file=sys.stderr)
        return 2

    def gen():
        for v in vals:
            for u in units:
                if lf.f == 1:
                    yield lf.pi(v) * lf.from_rational(u)
                else:
                    yield lf.pi(v) * lf.from_coeffs(lf.field.decode(u))

    rows = []
    for a in gen():
        for b in gen():
            s = power_residue_symbol(lf, a, b, args.n)
            rows.append((a.as_str(), b.as_str(), s.exp, symbol_value_str(lf, s)))
    if args.format == "json":
        print(json.dumps([{"p": args.p, "f": args.f, "n": args.n,
                           "a": a, "b": b, "exp": e, "value": val}
                          for a, b, e, val in rows]))
    else:  # csv (and the human default)
        print("p,f,n,a,b,exp,value")
        for a, b, e, val in rows:
            print(f"{args.p},{args.f},{args.n},{a},{b},{e},{val}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="resforge",
        description="n-th power residue symbols over unramified p-adic fields, "
                    "three ways")
    subs = parser.add_subparsers(dest="command", required=True)

    sym = subs.add_parser("symbol", help="compute one symbol")
    _add_field_args(sym)
    sym.add_argument("--method", choices=("direct", "muset", "extension", "all"),
                     default="all")
    sym.add_argument("a")
    sym.add_argument("b")
    sym.set_defaults(func=_cmd_symbol)

    ver = subs.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=("zolotarev", "muset", "torsor", "lattice",
                                       "cocycle", "theorem", "corollary", "all"))
    ver.add_argument("--p", type=int, action="append",
                     help="restrict sweep primes (repeatable)")
    ver.add_argument("--seed", type=int, default=_env("SEED", int, 0))
    ver.add_argument("--format", choices=("human", "json"),
                     default=_env("FORMAT", str, "human"))
    ver.set_defaults(func=_cmd_verify)

    tab = subs.add_parser("table", help="emit a symbol table over a grid")
    _add_field_args(tab)
    tab.add_argument("--vmax", type=int, default=1,
                     help="valuations range over [-vmax, vmax]")
    tab.add_argument("--max-entries", type=int, default=250_000)
    tab.set_defaults(func=_cmd_table)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
