"""Command line entry point: ``repunit-res {info,resolve,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor

from . import encomplex as en
from . import export
from .oracle import DEFAULT_PRIME
from .pipeline import RunConfig, verify
from .semigroup import InvariantError, ParameterError, construct, repunit

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repunit-res",
        description="Graded free resolutions of generalized repunit semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p, required=True):
        p.add_argument("--b", type=int, required=required, help="base, >= 2")
        p.add_argument("--n", type=int, required=required, help="embedding dimension, >= 2")
        p.add_argument("--a", type=int, required=required, help="step, coprime to a1")

    p = sub.add_parser("info", help="generators, c, Betti numbers, PF set, Frobenius number")
    params(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("resolve", help="emit the graded resolution")
    params(p)
    p.add_argument("--format", choices=("text", "json", "macaulay2", "singular"), default="text")

    p = sub.add_parser("verify", help="run every verification pass")
    params(p, required=False)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound-margin", type=int, default=None,
                   help="extra degrees scanned past the largest shift (default max a_i)")
    p.add_argument("--inject-fault", choices=en.FAULT_KINDS, default=None,
                   help="test hook: corrupt the complex before verifying")
    p.add_argument("--fault-level", type=int, default=None)
    p.add_argument("--grid", action="store_true", help="verify a whole parameter lattice")
    p.add_argument("--grid-b", type=_int_list, default=[2, 3])
    p.add_argument("--grid-n", type=_int_list, default=[2, 3, 4, 5])
    p.add_argument("--grid-a", type=_int_list, default=list(range(1, 9)))
    p.add_argument("--jobs", type=int, default=1)
    return parser


def cmd_info(args, out) -> int:
    S = construct(args.b, args.n, args.a)
    betti = [en.betti_number(S.n, j) for j in range(1, S.n)]
    pf = sorted(S.pf_formula())
    info = {
        "params": {"b": S.b, "n": S.n, "a": S.a},
        "generators": list(S.generators),
        "extended": S.extended,
        "c": S.c,
        "betti": betti,
        "pseudo_frobenius": pf,
        "frobenius": S.frobenius(),
    }
    if args.format == "json":
        out.write(json.dumps(info, indent=2) + "\n")
    else:
        out.write(f"generators: {', '.join(map(str, S.generators))}\n"
                  f"a_{S.n + 1}: {S.extended}\n"
                  f"c: {S.c}\n"
                  f"betti: {tuple(betti)}\n"
                  f"PF: {{{', '.join(map(str, pf))}}}\n"
                  f"frobenius: {S.frobenius()}\n")
    return EXIT_OK


def cmd_resolve(args, out) -> int:
    S = construct(args.b, args.n, args.a)
    gc = en.build_resolution(S)
    en.toric_minors(S)
    writer = {"text": export.to_text, "json": export.to_json,
              "macaulay2": export.to_macaulay2, "singular": export.to_singular}[args.format]
    out.write(writer(gc))
    return EXIT_OK


def _config(args, b, n, a) -> RunConfig:
    return RunConfig(b, n, a, prime=args.prime, trials=args.trials,
                     bound_margin=args.bound_margin, seed=args.seed,
                     fault=args.inject_fault, fault_level=args.fault_level)


def _grid_row(config: RunConfig):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        result = verify(config)
    return config, result.passed, result.summary(), [c.line() for c in result.checks if not c.passed]


def cmd_verify(args, out) -> int:
    if args.grid:
        configs = [_config(args, b, n, a)
                   for b in args.grid_b for n in args.grid_n for a in args.grid_a
                   if b >= 2 and n >= 2 and a >= 1 and math.gcd(a, repunit(b, n)) == 1]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                rows = list(pool.map(_grid_row, configs))
        else:
            rows = [_grid_row(c) for c in configs]
        out.write(f"{'b':>3} {'n':>3} {'a':>3}  result\n")
        for config, _, summary, failures in rows:
            out.write(f"{config.b:>3} {config.n:>3} {config.a:>3}  {summary}\n")
            for line in failures:
                out.write(f"             {line}\n")
        failed = sum(not ok for _, ok, _, _ in rows)
        out.write(f"{len(rows) - failed}/{len(rows)} instances pass\n")
        return EXIT_OK if not failed else EXIT_FAIL

    if None in (args.b, args.n, args.a):
        raise ParameterError("verify needs --b, --n and --a (or --grid)")
    result = verify(_config(args, args.b, args.n, args.a))
    for check in result.checks:
        out.write(check.line() + "\n")
    out.write(result.summary() + "\n")
    return EXIT_OK if result.passed else EXIT_FAIL


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {"info": cmd_info, "resolve": cmd_resolve, "verify": cmd_verify}[args.command]
    try:
        return handler(args, out)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
