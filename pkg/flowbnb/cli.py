"""
Command-line interface: solve, verify, oracle, sweep, bench and convert
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from .bench.harness import (
    bench_configs,
    load_instances,
    parse_int_list,
    parse_range,
    run_bench,
    run_oracle,
    run_sweep,
    run_verify,
    solve_instance,
    summary_exit_code,
)
from .bench.records import RunRecord, records_to_csv, write_records
from .config.config import SkeletonConfig
from .core.errors import SearchDeadlockError
from .core.instance import parse_taillard, read_instance, save_instance
from .core.types import Coordination

logger = logging.getLogger(__name__)

SKELETONS = ["seq", "depthbounded", "budget", "stackstealing", "direct"]
DEFAULT_SKELETON = "budget"


def _add_search_flags(parser: argparse.ArgumentParser, skeleton: bool = True) -> None:
    if skeleton:
        parser.add_argument("--skeleton", choices=SKELETONS, default=None,
                            help=f"search coordination (default {DEFAULT_SKELETON})")
    parser.add_argument("--workers", type=int, default=None,
                        help="worker threads (default: number of CPUs)")
    parser.add_argument("--cutoff-depth", type=int, default=None,
                        help="DepthBounded spawn depth (default 5)")
    parser.add_argument("--backtrack-budget", type=int, default=None,
                        help="Budget backtracks before spilling (default 50000)")
    parser.add_argument("--seed", type=int, default=None, help="RNG seed for victim selection")
    parser.add_argument("--time-limit", type=float, default=None, help="seconds")
    parser.add_argument("--config", default=None, help="YAML SkeletonConfig file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowbnb",
        description="Parallel branch and bound for the permutation flowshop problem",
    )
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance")
    solve.add_argument("--instance", required=True)
    _add_search_flags(solve)
    solve.add_argument("--output", choices=["text", "json"], default="text")
    solve.add_argument("--trace", default=None, help="write search events as JSON lines")

    verify = sub.add_parser("verify", help="check instances against expected makespans")
    verify.add_argument("--manifest", required=True)
    _add_search_flags(verify)

    oracle = sub.add_parser("oracle", help="generate random instances with exhaustive optima")
    oracle.add_argument("--count", type=int, default=50)
    oracle.add_argument("--jobs", default="5-9", help="LOW-HIGH")
    oracle.add_argument("--machines", default="3-6", help="LOW-HIGH")
    oracle.add_argument("--max-time", type=int, default=20)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.add_argument("--out", required=True)

    sweep = sub.add_parser("sweep", help="runtime against a skeleton parameter")
    sweep.add_argument("--instance", required=True)
    sweep.add_argument("--skeleton", choices=["depthbounded", "budget", "seq", "stackstealing"],
                       required=True)
    sweep.add_argument("--values", required=True, help="comma-separated parameter values")
    sweep.add_argument("--repeats", type=int, default=3)
    sweep.add_argument("--records", default=None, help=".csv, .jsonl or .parquet (default stdout CSV)")
    _add_search_flags(sweep, skeleton=False)

    bench = sub.add_parser("bench", help="compare skeletons and worker counts")
    bench.add_argument("--manifest", required=True)
    bench.add_argument("--skeletons", default="depthbounded,budget,stackstealing")
    bench.add_argument("--workers", default=None, help="comma-separated worker counts")
    bench.add_argument("--repeats", type=int, default=3)
    bench.add_argument("--baseline-workers", type=int, default=1)
    bench.add_argument("--cutoff-depth", type=int, default=None)
    bench.add_argument("--backtrack-budget", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--time-limit", type=float, default=None)
    bench.add_argument("--records", default=None)
    bench.add_argument("--summary", default=None, help="write per-cell statistics as CSV")

    convert = sub.add_parser("convert", help="Taillard machine-major file to .fsp")
    convert.add_argument("--taillard", required=True)
    convert.add_argument("--out", required=True)
    convert.add_argument("--name", default=None)
    return parser


def _parameter_flags(
    args: argparse.Namespace, coordination: Coordination, params: Dict[str, Any]
) -> None:
    """Apply --cutoff-depth/--backtrack-budget, warning when they do not apply"""
    for attr, flag, owner in (
        ("cutoff_depth", "--cutoff-depth", Coordination.DEPTH_BOUNDED),
        ("backtrack_budget", "--backtrack-budget", Coordination.BUDGET),
    ):
        value = getattr(args, attr, None)
        if value is None:
            continue
        if coordination is owner:
            params[attr] = value
        else:
            logger.warning("%s only applies to %s; ignored for %s",
                           flag, owner.value, coordination.value)


def build_config(args: argparse.Namespace, skeleton: Optional[str] = None) -> SkeletonConfig:
    """
    Defaults, then the --config file, then flags. Parameters belonging to a
    different skeleton are dropped.
    """
    base: Dict[str, Any] = {}
    if getattr(args, "config", None):
        base = SkeletonConfig.read_yaml(args.config)
        SkeletonConfig.from_dict(base)

    name = skeleton or getattr(args, "skeleton", None) or base.get("coordination") or DEFAULT_SKELETON
    coordination = Coordination.parse(name)

    params = {k: v for k, v in base.items() if k != "coordination"}
    if coordination is not Coordination.DEPTH_BOUNDED:
        params.pop("cutoff_depth", None)
    if coordination is not Coordination.BUDGET:
        params.pop("backtrack_budget", None)
    _parameter_flags(args, coordination, params)

    workers = getattr(args, "workers", None)
    if isinstance(workers, int):
        params["workers"] = workers
    elif "workers" not in params:
        params["workers"] = os.cpu_count() or 1
    if getattr(args, "seed", None) is not None:
        params["rng_seed"] = args.seed
    if getattr(args, "time_limit", None) is not None:
        params["time_limit"] = args.time_limit
    if getattr(args, "trace", None):
        params["trace_path"] = args.trace

    config = SkeletonConfig.for_coordination(coordination, **params)
    config.validate()
    return config


def _print_text(record: RunRecord, num_jobs: int, num_machines: int, config: SkeletonConfig) -> None:
    print(f"instance:       {record.instance_name} ({num_jobs} jobs, {num_machines} machines)")
    print(f"skeleton:       {config}")
    print(f"makespan:       {record.makespan}")
    print(f"permutation:    {record.permutation}")
    print(f"proven_optimal: {str(record.proven_optimal).lower()}")
    print(f"wall_time:      {record.wall_time_seconds:.6f}s")
    for name, value in record.metrics().counters().items():
        print(f"{name + ':':<16}{value}")


def cmd_solve(args: argparse.Namespace) -> int:
    inst = read_instance(args.instance)
    config = build_config(args)
    result, record = solve_instance(inst, config)
    if args.output == "json":
        print(json.dumps(record.to_dict()))
    else:
        _print_text(record, inst.num_jobs, inst.num_machines, config)
    return 0 if result.proven_optimal else 2


def cmd_verify(args: argparse.Namespace) -> int:
    config = build_config(args)
    report = run_verify(args.manifest, config)
    print(report.to_frame().to_string(index=False))
    return report.exit_code


def cmd_oracle(args: argparse.Namespace) -> int:
    manifest = run_oracle(
        count=args.count,
        jobs=parse_range(args.jobs),
        machines=parse_range(args.machines),
        max_time=args.max_time,
        seed=args.seed,
        out_dir=args.out,
    )
    print(manifest)
    return 0


def _emit_records(records: Sequence[RunRecord], path: Optional[str]) -> None:
    if path:
        write_records(records, path)
    else:
        sys.stdout.write(records_to_csv(records))


def cmd_sweep(args: argparse.Namespace) -> int:
    coordination = Coordination.parse(args.skeleton)
    config = build_config(args, skeleton=coordination.value)
    overrides = config.to_dict()
    for key in ("coordination", "cutoff_depth", "backtrack_budget"):
        overrides.pop(key)
    inst = read_instance(args.instance)
    records = run_sweep(inst, coordination, parse_int_list(args.values), args.repeats, **overrides)
    _emit_records(records, args.records)
    return summary_exit_code(records)


def cmd_bench(args: argparse.Namespace) -> int:
    skeletons = [Coordination.parse(s) for s in args.skeletons.split(",") if s.strip()]
    workers = parse_int_list(args.workers) if args.workers else sorted({1, os.cpu_count() or 1})
    overrides: Dict[str, Any] = {}
    if args.seed is not None:
        overrides["rng_seed"] = args.seed
    if args.time_limit is not None:
        overrides["time_limit"] = args.time_limit

    configs = bench_configs(
        skeletons,
        workers,
        args.baseline_workers,
        cutoff_depth=args.cutoff_depth,
        backtrack_budget=args.backtrack_budget,
        **overrides,
    )

    instances = load_instances(args.manifest)
    records, summary = run_bench(instances, configs, args.repeats, args.baseline_workers)
    if args.records:
        write_records(records, args.records)
    if args.summary:
        summary.to_frame().to_csv(args.summary, index=False)
    print(summary.to_frame().to_string(index=False))
    print()
    print(summary.geomean_frame().to_string(index=False))
    return summary_exit_code(records)


def cmd_convert(args: argparse.Namespace) -> int:
    with open(args.taillard, "r", encoding="utf-8") as f:
        text = f.read()
    name = args.name or os.path.splitext(os.path.basename(args.out))[0]
    inst = parse_taillard(text, name=name)
    save_instance(
        inst,
        args.out,
        provenance=[
            f"{name}: converted from {os.path.basename(args.taillard)}",
            "source layout machine-major (Taillard), transposed to job-major",
        ],
    )
    print(f"{args.out}: {inst}")
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "bench": cmd_bench,
    "convert": cmd_convert,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Exit status: 0 proven, 2 unproven (time limit), 1 error"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError, SearchDeadlockError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
