"""Command-line front end: ``check``, ``scan``, ``walls`` and ``dims``."""

import argparse
import sys

from cohsys import arith
from cohsys.criteria import Outcome, a_max, verdict
from cohsys.scan import ScanConfig, render_csv, render_svg, scan_region
from cohsys.walls import clifford_feasible, wall_candidates

EXIT_CODES = {
    Outcome.GUARANTEED_NONEMPTY: 0,
    Outcome.UNKNOWN: 2,
    Outcome.CLIFFORD_INFEASIBLE: 3,
}
EXIT_USAGE = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cohsys", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", help="verdict and witness for one type (g; n, d, k)")
    for name in ("g", "n", "d", "k"):
        p.add_argument(f"--{name}", type=int, required=True)

    p = sub.add_parser("scan", help="verdict map over a (d, k) rectangle")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--k-min", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--figure", help="also save a matplotlib rendering to this path")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    p = sub.add_parser("walls", help="candidate critical values of alpha")
    for name in ("g", "n", "d", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--d-sub-min", type=int, help="lowest subsystem degree scanned (default 0)")
    p.add_argument("--d-sub-max", type=int, help="highest subsystem degree scanned (default d)")

    p = sub.add_parser("dims", help="dimension report for the (0,a)-stable locus")
    for name in ("g", "n", "d", "a"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--k", type=int, default=0, help="section count used for rho (default 0)")
    return parser


def cmd_check(args, out) -> int:
    v = verdict(args.g, args.n, args.d, args.k)
    print(f"type: g={args.g} n={args.n} d={args.d} k={args.k}", file=out)
    print(f"outcome: {v.outcome.value}", file=out)
    print(f"clifford_max_k: {arith.clifford_max_k(args.g, args.n, args.d)}", file=out)
    print(f"rho: {arith.rho(args.g, args.n, args.d, args.k)}", file=out)
    if v.witness is not None:
        print(f"witness: {v.witness.describe()}", file=out)
        for key, value in v.witness.notes.items():
            print(f"  {key}: {value}", file=out)
        for w in v.certificates[1:]:
            print(f"also: {w.describe()}", file=out)
    if v.expected_dim_component is not None:
        print(f"expected_dim_component: {v.expected_dim_component}", file=out)
    if v.conditional is not None:
        print(f"conditional: {v.conditional.describe()}", file=out)
    return EXIT_CODES[v.outcome]


def cmd_scan(args, out) -> int:
    config = ScanConfig(
        args.g, args.n, args.d_min, args.d_max, args.k_min, args.k_max, args.format, args.out
    )
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    region = scan_region(config, jobs=args.jobs)
    data = render_csv(region) if config.fmt == "csv" else render_svg(region)
    if config.out:
        with open(config.out, "wb") as fh:
            fh.write(data)
    elif hasattr(out, "buffer"):
        out.flush()
        out.buffer.write(data)
        out.buffer.flush()
    else:
        out.write(data.decode("ascii"))
    if args.figure:
        from cohsys.plot import save_region_figure

        save_region_figure(region, args.figure)
    return 0


def cmd_walls(args, out) -> int:
    d_sub_range = None
    if args.d_sub_min is not None or args.d_sub_max is not None:
        lo = 0 if args.d_sub_min is None else args.d_sub_min
        hi = args.d if args.d_sub_max is None else args.d_sub_max
        d_sub_range = (lo, hi)
    ws = wall_candidates(args.n, args.d, args.k, d_sub_range)
    print(f"type: n={args.n} d={args.d} k={args.k}", file=out)
    print(f"d_sub_range: [{ws.d_sub_range[0]}, {ws.d_sub_range[1]}]", file=out)
    cutoff = "unbounded" if ws.upper_cutoff is None else str(ws.upper_cutoff)
    print(f"upper_cutoff: {cutoff}", file=out)
    print(f"clifford_feasible: {clifford_feasible(args.g, args.n, args.d, args.k)}", file=out)
    print(f"count: {len(ws)}", file=out)
    print("walls: " + " ".join(str(w) for w in ws.walls), file=out)
    return 0


def cmd_dims(args, out) -> int:
    g, n, d, a = args.g, args.n, args.d, args.a
    arith.SystemType(g, n, d, args.k)
    if n < 2:
        raise UsageError("dims needs n >= 2")
    print(f"type: g={g} n={n} d={d} a={a}", file=out)
    print(f"epsilon: {arith.epsilon(g, n, d)}", file=out)
    print(f"a_max: {a_max(g, n, d)}", file=out)
    print(f"rho(k={args.k}): {arith.rho(g, n, d, args.k)}", file=out)
    print(f"s_delta: {arith.s_delta(g, n, d, a)}", file=out)
    print(f"dim_complement: {arith.dim_a0a_complement(g, n, d, a)}", file=out)
    for m in range(1, n):
        print(f"tilde_s[{m}]: {arith.tilde_s(n, d, a, m)}", file=out)
    print("strata: m s dim in_complement", file=out)
    for m in range(1, n):
        for stratum in arith.segre_strata(g, n, d, m):
            flag = "yes" if stratum.s <= m * a else "no"
            print(f"  {m} {stratum.s} {stratum.dim} {flag}", file=out)
    return 0


COMMANDS = {"check": cmd_check, "scan": cmd_scan, "walls": cmd_walls, "dims": cmd_dims}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, UsageError) as exc:
        print(f"cohsys {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cohsys {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
