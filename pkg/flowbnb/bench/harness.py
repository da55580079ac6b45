"""
Benchmark harness: verify, oracle, sweep and bench runs over instance manifests
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..config.config import SkeletonConfig
from ..core.errors import ConfigError, OracleLimitError
from ..core.heuristics import EXHAUSTIVE_LIMIT, exhaustive_search
from ..core.instance import Instance, generate_random_instance, read_instance, save_instance
from ..core.types import Coordination
from ..search.engine import SearchResult, search
from .records import RunRecord
from .stats import BenchSummary, compute_stats

logger = logging.getLogger(__name__)

MANIFEST_COLUMNS = ["instance", "expected_makespan"]

PASS = "PASS"
FAIL = "FAIL"
TIMEOUT = "TIMEOUT"


@dataclass
class ManifestEntry:
    """One manifest row; instance_path is resolved against the manifest's directory"""

    instance: str
    instance_path: str
    expected_makespan: int


def read_manifest(path: str) -> List[ManifestEntry]:
    """Read an `instance,expected_makespan` CSV"""
    if not os.path.exists(path):
        raise FileNotFoundError(f"Manifest not found: {path}")
    try:
        frame = pd.read_csv(path, dtype=str, comment="#", skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise ValueError(f"Malformed manifest {path}: {exc}") from exc

    if list(frame.columns) != MANIFEST_COLUMNS:
        raise ValueError(
            f"Malformed manifest {path}: header must be "
            f"'{','.join(MANIFEST_COLUMNS)}', got '{','.join(map(str, frame.columns))}'"
        )
    if frame.isna().any().any():
        raise ValueError(f"Malformed manifest {path}: empty cells")
    makespans = frame["expected_makespan"].str.strip()
    whole = makespans.str.fullmatch(r"\d+")
    if not whole.all():
        bad = makespans[~whole].iloc[0]
        raise ValueError(
            f"Malformed manifest {path}: expected_makespan must be a whole number, got '{bad}'"
        )
    expected = makespans.astype(np.int64)

    base = os.path.dirname(os.path.abspath(path))
    entries = []
    for instance, makespan in zip(frame["instance"], expected):
        instance_path = instance if os.path.isabs(instance) else os.path.join(base, instance)
        entries.append(ManifestEntry(instance, instance_path, int(makespan)))
    return entries


def write_manifest(entries: Iterable[Tuple[str, int]], path: str) -> None:
    frame = pd.DataFrame(list(entries), columns=MANIFEST_COLUMNS)
    frame.to_csv(path, index=False, lineterminator="\n")


def solve_instance(
    inst: Instance, config: SkeletonConfig, repeat_index: int = 0
) -> Tuple[SearchResult, RunRecord]:
    """Run one search and wrap it as a RunRecord"""
    result = search(inst, config)
    record = RunRecord.from_result(inst.name, config, result, repeat_index)
    logger.info(
        "%s %s repeat %d: makespan %d%s in %.3fs",
        inst.name,
        config,
        repeat_index,
        result.makespan,
        "" if result.proven_optimal else " (unproven)",
        record.wall_time_seconds,
    )
    return result, record


@dataclass
class VerifyRow:
    instance: str
    expected_makespan: int
    makespan: int
    proven_optimal: bool
    status: str
    wall_time_seconds: float


@dataclass
class VerifyReport:
    rows: List[VerifyRow] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        """1 if any row failed, else 2 if any timed out, else 0"""
        # a TIMEOUT-only report is unproven, so it exits 2 like any unproven solve, not 0
        statuses = {row.status for row in self.rows}
        if FAIL in statuses:
            return 1
        if TIMEOUT in statuses:
            return 2
        return 0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [vars(row) for row in self.rows],
            columns=["instance", "expected_makespan", "makespan", "proven_optimal",
                     "status", "wall_time_seconds"],
        )


def _verdict(result: SearchResult, expected: int) -> str:
    # an unproven incumbent below the expected value already disproves it
    if result.makespan < expected:
        return FAIL
    if not result.proven_optimal:
        return TIMEOUT
    return PASS if result.makespan == expected else FAIL


def run_verify(manifest_path: str, config: SkeletonConfig) -> VerifyReport:
    """Solve every manifest instance and compare with its expected makespan"""
    entries = read_manifest(manifest_path)
    missing = [e.instance_path for e in entries if not os.path.exists(e.instance_path)]
    if missing:
        raise FileNotFoundError(f"Missing instance files: {', '.join(missing)}")

    report = VerifyReport()
    for entry in entries:
        inst = read_instance(entry.instance_path)
        result, record = solve_instance(inst, config)
        status = _verdict(result, entry.expected_makespan)
        if status != PASS:
            logger.warning(
                "%s: %s (expected %d, found %d)",
                entry.instance, status, entry.expected_makespan, result.makespan,
            )
        report.rows.append(
            VerifyRow(
                instance=entry.instance,
                expected_makespan=entry.expected_makespan,
                makespan=result.makespan,
                proven_optimal=result.proven_optimal,
                status=status,
                wall_time_seconds=record.wall_time_seconds,
            )
        )
    return report


def run_oracle(
    count: int,
    jobs: Tuple[int, int],
    machines: Tuple[int, int],
    max_time: int,
    seed: int,
    out_dir: str,
) -> str:
    """
    Generate count random instances, solve each exhaustively and write
    oracle_NNN.fsp files plus manifest.csv into out_dir.

    The output is a pure function of the arguments.

    Returns:
        Path of the manifest
    """
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    for label, (low, high) in (("jobs", jobs), ("machines", machines)):
        if low < 1 or high < low:
            raise ValueError(f"invalid {label} range {low}-{high}")
    if jobs[1] > EXHAUSTIVE_LIMIT:
        raise OracleLimitError(
            f"jobs range {jobs[0]}-{jobs[1]} exceeds the exhaustive-search limit "
            f"of {EXHAUSTIVE_LIMIT} jobs"
        )

    os.makedirs(out_dir, exist_ok=True)
    rng = np.random.default_rng(seed)
    entries = []
    for index in range(count):
        num_jobs = int(rng.integers(jobs[0], jobs[1], endpoint=True))
        num_machines = int(rng.integers(machines[0], machines[1], endpoint=True))
        instance_seed = int(rng.integers(0, 2**63))
        inst = generate_random_instance(num_jobs, num_machines, max_time, instance_seed)
        optimum = exhaustive_search(inst)

        file_name = f"oracle_{index:03d}.fsp"
        save_instance(
            inst,
            os.path.join(out_dir, file_name),
            provenance=[
                f"generated {inst.name}",
                f"oracle suite seed {seed}, index {index}",
                f"exhaustive optimum {optimum.makespan}",
            ],
        )
        entries.append((file_name, optimum.makespan))
        logger.info("%s: %s optimum %d", file_name, inst, optimum.makespan)

    manifest_path = os.path.join(out_dir, "manifest.csv")
    write_manifest(entries, manifest_path)
    return manifest_path


def run_sweep(
    inst: Instance,
    coordination: Coordination,
    values: Sequence[int],
    repeats: int = 3,
    **overrides,
) -> List[RunRecord]:
    """One run per (value, repeat) of DepthBounded cutoff or Budget budget"""
    coordination = Coordination.parse(coordination)
    if coordination is Coordination.DEPTH_BOUNDED:
        parameter = "cutoff_depth"
    elif coordination is Coordination.BUDGET:
        parameter = "backtrack_budget"
    else:
        raise ConfigError(f"{coordination.value} has no parameter to sweep")
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    if not values:
        raise ValueError("sweep needs at least one value")

    records = []
    for value in values:
        config = SkeletonConfig.for_coordination(coordination, **{parameter: value}, **overrides)
        config.validate()
        for repeat in range(repeats):
            _, record = solve_instance(inst, config, repeat)
            records.append(record)
    return records


def bench_configs(
    skeletons: Sequence[Coordination],
    workers: Sequence[int],
    baseline_workers: int = 1,
    cutoff_depth: Optional[int] = None,
    backtrack_budget: Optional[int] = None,
    **overrides,
) -> List[SkeletonConfig]:
    """
    The cross product of skeletons and worker counts. cutoff_depth and
    backtrack_budget only reach the skeleton they belong to.

    Raises:
        ConfigError: no run can act as a speedup baseline
    """
    skeletons = [Coordination.parse(s) for s in skeletons]
    if not skeletons or not workers:
        raise ConfigError("bench needs at least one skeleton and one worker count")
    has_sequential = Coordination.SEQUENTIAL in skeletons
    if baseline_workers not in workers and not has_sequential:
        raise ConfigError(
            f"missing baseline runs: worker counts {list(workers)} do not include "
            f"--baseline-workers {baseline_workers} and no sequential skeleton is requested"
        )

    configs: List[SkeletonConfig] = []
    seen = set()
    if cutoff_depth is not None and Coordination.DEPTH_BOUNDED not in skeletons:
        logger.warning("cutoff_depth given but no depthbounded skeleton requested; ignored")
    if backtrack_budget is not None and Coordination.BUDGET not in skeletons:
        logger.warning("backtrack_budget given but no budget skeleton requested; ignored")

    for coordination in skeletons:
        params = dict(overrides)
        if coordination is Coordination.DEPTH_BOUNDED and cutoff_depth is not None:
            params["cutoff_depth"] = cutoff_depth
        if coordination is Coordination.BUDGET and backtrack_budget is not None:
            params["backtrack_budget"] = backtrack_budget
        for count in workers:
            config = SkeletonConfig.for_coordination(coordination, workers=count, **params)
            config.validate()
            key = (config.coordination, config.workers)
            if key in seen:
                # sequential collapses every worker count to one run
                continue
            seen.add(key)
            configs.append(config)
    return configs


def run_bench(
    instances: Sequence[Instance],
    configs: Sequence[SkeletonConfig],
    repeats: int = 3,
    baseline_workers: int = 1,
) -> Tuple[List[RunRecord], BenchSummary]:
    """Run every (instance, config, repeat) strictly one after another"""
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    records: List[RunRecord] = []
    total = len(instances) * len(configs) * repeats
    for inst in instances:
        for config in configs:
            for repeat in range(repeats):
                _, record = solve_instance(inst, config, repeat)
                records.append(record)
                logger.info("bench progress %d/%d", len(records), total)
    return records, compute_stats(records, baseline_workers)


def load_instances(manifest_path: str) -> List[Instance]:
    entries = read_manifest(manifest_path)
    return [read_instance(e.instance_path) for e in entries]


def parse_range(text: str) -> Tuple[int, int]:
    """'5-9' -> (5, 9); '7' -> (7, 7)"""
    parts = text.split("-")
    try:
        if len(parts) == 1:
            value = int(parts[0])
            return value, value
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise ValueError(f"invalid range '{text}', expected N or LOW-HIGH")


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValueError(f"invalid integer list '{text}'") from None


def summary_exit_code(records: Optional[Sequence[RunRecord]]) -> int:
    return 0 if all(r.proven_optimal for r in records or []) else 2
