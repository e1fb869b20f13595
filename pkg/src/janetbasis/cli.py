"""Benchmark front end: ``janetbasis compute ...``.

Exit status is 0 when every run finished and passed the requested checks,
1 when a verification check failed, 2 on usage or input errors and 3 when a
run hit its time limit (the partial statistics are still reported).
"""

from __future__ import annotations

import argparse
import json
import resource
import sys
import time

from .algorithms import ALGORITHMS, TIE_BREAKS, compute
from .engine import CriteriaConfig, TimeLimitExceeded, tail_autoreduce
from .ordering import ORDERS
from .systems import ParseError, generate, load_fixture, read_system

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

COLUMNS = (
    ("system", "system"),
    ("algorithm", "algorithm"),
    ("time(ms)", "cpu_ms"),
    ("memo(KB)", "peak_rss_kb"),
    ("reds", "reductions_to_zero"),
    ("C1", "c1"),
    ("C2", "c2"),
    ("C3", "c3"),
    ("C4", "c4"),
    ("R", "rewritten"),
    ("deg", "max_degree"),
    ("size", "basis_size"),
    ("verified", "verified"),
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="janetbasis", description="Minimal Janet bases and their statistics."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    c = sub.add_parser("compute", help="run completion algorithms on polynomial systems")
    src = c.add_argument_group("systems (any number, in order)")
    src.add_argument("--input", action="append", default=[], metavar="FILE",
                     help="system file (vars/order header, one polynomial per line)")
    src.add_argument("--fixture", action="append", default=[], metavar="NAME",
                     help="bundled benchmark system, e.g. noon4 or katsura5")
    src.add_argument("--generate", action="append", default=[], metavar="cyclic:N",
                     help="generated family member")
    c.add_argument("--algorithm", default="vargerdt", choices=[*ALGORITHMS, "all"])
    c.add_argument("--criteria", default="c1,c2",
                   help="comma list of c1..c4, 'all' or 'none' (default c1,c2)")
    c.add_argument("--no-rewritten", action="store_true",
                   help="switch the Rewritten criterion off")
    c.add_argument("--order", choices=sorted(ORDERS), help="override the file's ordering")
    c.add_argument("--tie-break", default="examined", choices=TIE_BREAKS,
                   help="rank of ancestors among equal leading monomials")
    c.add_argument("--verify", action="store_true", help="run the Groebner oracle checks")
    c.add_argument("--autoreduce-tail", action="store_true",
                   help="tail-autoreduce the output basis")
    c.add_argument("--print-basis", action="store_true", help="print the basis polynomials")
    c.add_argument("--stats-json", metavar="PATH", help="write the report as JSON ('-' for stdout)")
    c.add_argument("--time-limit", type=float, metavar="SEC", help="wall-clock budget per run")
    c.add_argument("--preprocess", choices=["autoreduce"],
                   help="interreduce the input before completion")
    return parser


def _load_systems(args, parser):
    systems = []
    try:
        for path in args.input:
            systems.append(read_system(path))
        for name in args.fixture:
            systems.append(load_fixture(name))
        for spec in args.generate:
            systems.append(generate(spec))
    except FileNotFoundError as exc:
        parser.error(f"cannot read {exc.filename}")
    except ParseError as exc:
        parser.error(f"{path}: {exc}")
    except ValueError as exc:
        parser.error(str(exc))
    if not systems:
        parser.error("no system given (use --input, --fixture or --generate)")
    if args.order:
        systems = [s.with_order(args.order) for s in systems]
    return systems


def _peak_rss_kb():
    # ru_maxrss is in kilobytes on Linux; process-wide peak, so best effort only
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss


def run_one(system, algorithm, cfg, args):
    """Compute one basis; returns ``(record, basis)``."""
    record = {"system": system.name, "algorithm": algorithm}
    basis = None
    timed_out = False
    start = time.process_time()
    try:
        basis, stats = compute(
            system.polys, algorithm, cfg=cfg, time_limit=args.time_limit,
            preprocess=args.preprocess == "autoreduce", tie_break=args.tie_break,
        )
    except TimeLimitExceeded as exc:
        stats = exc.stats
        stats.cpu_ms = (time.process_time() - start) * 1000.0
        timed_out = True
    if basis is not None and args.autoreduce_tail:
        basis = tail_autoreduce(basis)
    criteria_used = algorithm != "invbasis"
    record.update(
        basis_size=stats.basis_size,
        reductions_to_zero=stats.zero_reductions,
        c1=stats.c1_hits,
        c2=stats.c2_hits,
        c3=stats.c3_hits,
        c4=stats.c4_hits,
        rewritten=stats.rewritten_hits,
        max_degree=stats.max_intermediate_degree,
        cpu_ms=round(stats.cpu_ms, 3),
        verified=None,
        head_reduce_purges=stats.head_reduce_purges,
        peak_rss_kb=_peak_rss_kb(),
        criteria=cfg.label() if criteria_used else "none",
        rewritten_enabled=cfg.rewritten and criteria_used,
        order=system.order.name,
        timed_out=timed_out,
        stats=stats.as_dict(),
    )
    if basis is not None and args.verify:
        from .oracle import verify_involutive_output

        record["verified"] = verify_involutive_output(system.polys, basis).as_dict()
    return record, basis


def _cell(record, key):
    value = record[key]
    if key == "verified":
        if record["timed_out"]:
            return "timeout"
        if value is None:
            return "-"
        return "yes" if all(value.values()) else "NO:" + ",".join(k for k, v in value.items() if not v)
    if key == "cpu_ms":
        return f"{value:.0f}"
    return str(value)


def format_table(records):
    rows = [[h for h, _ in COLUMNS]]
    rows += [[_cell(r, k) for _, k in COLUMNS] for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(COLUMNS))]
    lines = []
    for n, row in enumerate(rows):
        cells = [c.ljust(w) if i < 2 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths))]
        lines.append("  ".join(cells).rstrip())
        if n == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def cmd_compute(args, parser):
    try:
        cfg = CriteriaConfig.parse(args.criteria, rewritten=not args.no_rewritten)
    except ValueError as exc:
        parser.error(str(exc))
    if args.time_limit is not None and args.time_limit <= 0:
        parser.error("--time-limit must be positive")
    systems = _load_systems(args, parser)
    algorithms = ALGORITHMS if args.algorithm == "all" else (args.algorithm,)
    records = []
    out = sys.stdout
    for system in systems:
        for algorithm in algorithms:
            record, basis = run_one(system, algorithm, cfg, args)
            records.append(record)
            if args.print_basis and basis is not None:
                print(f"# {system.name} / {algorithm}: {len(basis)} polynomials", file=out)
                for g in basis:
                    print(g, file=out)
    table_out = sys.stderr if args.stats_json == "-" else out
    print(format_table(records), file=table_out)
    if args.stats_json:
        text = json.dumps(records, indent=2)
        if args.stats_json == "-":
            print(text, file=out)
        else:
            with open(args.stats_json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    if any(r["timed_out"] for r in records):
        return EXIT_TIMEOUT
    if any(r["verified"] is not None and not all(r["verified"].values()) for r in records):
        return EXIT_VERIFY
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "compute":
        return cmd_compute(args, parser)
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
