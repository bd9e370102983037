"""Command-line front end: generate | solve | compare | scaling."""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable

from .generate import FAMILIES, generate_batch, generate_instance, ladder_types, parse_capacity_spec
from .model import Instance, InstanceError, Solution, read_instance, validate_instance, write_instance
from .oracle import oracle_dp
from .solver import solve, solve_with_report

COMPARE_HEADER = ["instance", "solver_objective", "oracle_objective", "match", "solver_seconds", "oracle_seconds"]
SCALING_HEADER = ["R", "n_types", "capacity", "wall_seconds", "dp_updates", "dp1_updates", "dp2_updates", "peak_cells"]


def solve_report(inst: Instance) -> dict:
    sol, bounds, stats = solve_with_report(inst)
    return {
        "objective": str(sol.objective),
        "total_weight": str(sol.total_weight),
        "capacity": str(inst.capacity),
        "counts": [str(c) for c in sol.counts],
        "bounds": bounds.as_dict(),
        "counters": {k: v for k, v in stats.as_dict().items() if k != "timings"},
        "timings": stats.timings,
    }


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, inst in generate_batch(args.family, args.R, args.count, args.capacity, args.seed, args.types):
        write_instance(inst, out / f"{name}.json")
    print(f"wrote {args.count} instances to {out}")
    return 0


def cmd_solve(args) -> int:
    try:
        inst = read_instance(args.instance)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = solve_report(inst)
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    print(f"objective {report['objective']}")
    if not args.report:
        sys.stdout.write(text)
    return 0


def _compare_one(path: Path, solver: Callable[[Instance], Solution]) -> list[str]:
    inst = read_instance(path)
    t0 = time.perf_counter()
    mine = solver(inst).objective
    t1 = time.perf_counter()
    ref = oracle_dp(inst).objective
    t2 = time.perf_counter()
    return [path.stem, str(mine), str(ref), "1" if mine == ref else "0", f"{t1 - t0:.6f}", f"{t2 - t1:.6f}"]


def compare_dir(directory, out, jobs: int = 1, solver: Callable[[Instance], Solution] = solve) -> int:
    """Write the comparison CSV to ``out``; return the number of mismatches."""
    paths = sorted(Path(directory).glob("*.json"))
    if jobs > 1 and paths:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_compare_one, paths, [solver] * len(paths)))
    else:
        rows = [_compare_one(p, solver) for p in paths]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COMPARE_HEADER)
    writer.writerows(rows)
    return sum(row[3] == "0" for row in rows)


def cmd_compare(args) -> int:
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            bad = compare_dir(args.instance_dir, fh, args.jobs)
    else:
        bad = compare_dir(args.instance_dir, sys.stdout, args.jobs)
    if bad:
        print(f"{bad} mismatch(es)", file=sys.stderr)
    return 1 if bad else 0


def scaling_rows(instances: Iterable[Instance], repeats: int = 1) -> list[list[str]]:
    rows = []
    for inst in instances:
        best = None
        for _ in range(max(1, repeats)):
            t0 = time.perf_counter()
            _, _, stats = solve_with_report(inst)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        rows.append([
            str(inst.coefficient_bound), str(len(inst.types)), str(inst.capacity), f"{best:.6f}",
            str(stats.dp_updates), str(stats.dp1_updates), str(stats.dp2_updates), str(stats.peak_cells),
        ])
    return rows


def _scaling_instances(args) -> Iterable[Instance]:
    caps = [parse_capacity_spec(c) for c in args.capacity]
    for R in args.R:
        if args.instance:
            base = read_instance(args.instance)
            types = base.types
            R = base.coefficient_bound
        elif args.family == "ladder":
            types = tuple(ladder_types(R))
        else:
            types = generate_instance(args.family, R, 0, random.Random(args.seed), args.types).types
        for C in caps:
            yield validate_instance(Instance(R, types, C))
        if args.instance:
            break


def cmd_scaling(args) -> int:
    rows = scaling_rows(_scaling_instances(args), args.repeats)
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SCALING_HEADER)
        writer.writerows(rows)
    finally:
        if args.out:
            fh.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ukpb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write seeded instance files")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--R", type=int, required=True)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--capacity", default="10^6", help="decimal or 10^k")
    g.add_argument("--types", type=int, default=None, help="types per instance (default R)")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out", required=True, help="output directory")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="solve one instance file")
    s.add_argument("instance")
    s.add_argument("--report", "--out", dest="report", default=None, help="write JSON report here")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("compare", help="solver vs full-capacity DP on every *.json in a directory")
    c.add_argument("instance_dir")
    c.add_argument("--out", default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_compare)

    sc = sub.add_parser("scaling", help="time and count DP work across capacities")
    sc.add_argument("--R", type=int, nargs="+", default=[20])
    sc.add_argument("--capacity", nargs="+", default=["10^6", "10^12", "10^18"])
    sc.add_argument("--family", choices=FAMILIES + ("ladder",), default="uncorrelated")
    sc.add_argument("--instance", default=None, help="use this instance's types instead of generating")
    sc.add_argument("--types", type=int, default=None)
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--repeats", type=int, default=1)
    sc.add_argument("--out", default=None)
    sc.set_defaults(func=cmd_scaling)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
