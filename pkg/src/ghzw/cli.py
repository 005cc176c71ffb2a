"""Command-line interface: ``ghzw <command> ...`` (or ``python -m ghzw``).

Exit codes: 0 success, 1 a reported check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import e6map as E
from . import selftest as ST
from . import spaces as S
from . import stateio
from . import tables as TB
from . import varieties as V
from .fts import parse_label

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _read_state(path: str):
    if path == "-":
        return stateio.parse(sys.stdin.buffer.read(), "<stdin>")
    return stateio.read(path)


def _fmt(v) -> str:
    return str(v)


def cmd_classify(args) -> int:
    desc, value = _read_state(args.file)
    print(S.classify(desc, value))
    print(f"space: {desc.name}")
    for k, v in S.invariants(desc, value).items():
        print(f"{k}: {_fmt(v)}")
    return EXIT_OK


def cmd_invariant(args) -> int:
    desc, value = _read_state(args.file)
    print(f"space: {desc.name}")
    for k, v in S.invariants(desc, value).items():
        print(f"{k}: {_fmt(v)}")
    return EXIT_OK


def cmd_dims(args) -> int:
    if args.space:
        try:
            V.get(args.space)
        except KeyError as err:
            print(f"error: {err.args[0]}", file=sys.stderr)
            return EXIT_USAGE
        names = [args.space]
    else:
        names = V.names()
    rows = TB.dims_rows(names, args.trials, args.seed)
    sys.stdout.write(TB.render(TB.DIMS_HEADER, rows, args.format))
    return EXIT_FAIL if any(r[-1] == "none" for r in rows) else EXIT_OK


def cmd_sample(args) -> int:
    desc = S.get(args.space)
    try:
        label = parse_label(args.klass)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    rng = random.Random(f"{args.seed}:sample:{desc.name}:{label}")
    value = S.sample(desc, label, rng)
    sys.stdout.write(stateio.emit(desc, value).decode("utf-8"))
    return EXIT_OK


def _table(rows, fmt) -> int:
    sys.stdout.write(TB.render(TB.HEADER, rows, fmt))
    return EXIT_FAIL if any(r[7] == "FAIL" for r in rows) else EXIT_OK


def cmd_table1(args) -> int:
    return _table(TB.table1_rows(args.trials, args.seed), args.format)


def cmd_table2(args) -> int:
    return _table(TB.table2_rows(args.trials, args.seed), args.format)


def _report(name: str, ok: bool, detail: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


def cmd_e6check(args) -> int:
    ok = True
    span = E.hessian_span_dim()
    ok &= _report("Hessian quadric span", span == E.HESSIAN_SPAN, f"{span} (expected {E.HESSIAN_SPAN})")
    image = E.image_span_dim(200, args.seed)
    ok &= _report("linear span of 200 image points", image == E.ADJOINT_DIM,
                  f"{image} (expected {E.ADJOINT_DIM})")
    dims = [E.image_dim(3, args.seed + k) for k in range(5)]
    ok &= _report("image dimension over 5 seeds", len(set(dims)) == 1 and dims[0] <= 21,
                  f"{dims[0] if len(set(dims)) == 1 else dims}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    t0 = time.perf_counter()
    results = ST.run(args.seed)
    ok = all([_report(*r) for r in results])
    print(f"{sum(r[1] for r in results)}/{len(results)} checks passed")
    if args.timing:
        print(f"elapsed {time.perf_counter() - t0:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ghzw", description="Entanglement classes from secant and tangential varieties.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify a state file ('-' for stdin)")
    c.add_argument("file")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("invariant", help="print the invariants of a state file")
    c.add_argument("file")
    c.set_defaults(func=cmd_invariant)

    fmt = dict(choices=("plain", "csv", "md"), default="plain")

    c = sub.add_parser("dims", help="secant and tangential dimensions of catalog varieties")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--space", help="catalog name (see --all)")
    g.add_argument("--all", action="store_true", help="every catalog entry (default)")
    c.add_argument("--trials", type=int, default=V.DEFAULT_TRIALS)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_dims)

    c = sub.add_parser("sample", help="emit a state file from an orbit")
    c.add_argument("--space", required=True, help=f"one of: {', '.join(S.names())}")
    c.add_argument("--class", dest="klass", required=True,
                   help="separable, biseparable, w, ghz or rank(k)")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_sample)

    for name, func, helptext in (("table1", cmd_table1, "recompute Table 1 (W and GHZ systems)"),
                                 ("table2", cmd_table2, "recompute Table 2 (two types, no W)")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("--trials", type=int, default=V.DEFAULT_TRIALS)
        c.add_argument("--seed", type=int, default=0)
        c.add_argument("--format", **fmt)
        c.set_defaults(func=func)

    c = sub.add_parser("e6-check", help="Hessian span, image span and image dimension of the E6 map")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_e6check)

    c = sub.add_parser("selftest", help="run the quick property suite")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--timing", action="store_true", help="print elapsed time (non-deterministic)")
    c.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    try:
        return args.func(args)
    except stateio.StateFileError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except S.SpaceError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
