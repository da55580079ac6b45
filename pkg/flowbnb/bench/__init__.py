"""
Bench module: run records, statistics and the benchmark harness
"""

from .records import (
    RECORD_COLUMNS,
    RunRecord,
    read_records,
    records_to_csv,
    records_to_frame,
    write_records,
)
from .stats import BenchSummary, CellStats, compute_stats, geometric_mean
from .harness import (
    ManifestEntry,
    VerifyReport,
    VerifyRow,
    bench_configs,
    load_instances,
    read_manifest,
    run_bench,
    run_oracle,
    run_sweep,
    run_verify,
    solve_instance,
    write_manifest,
)

__all__ = [
    "RECORD_COLUMNS",
    "RunRecord",
    "read_records",
    "records_to_csv",
    "records_to_frame",
    "write_records",
    "BenchSummary",
    "CellStats",
    "compute_stats",
    "geometric_mean",
    "ManifestEntry",
    "VerifyReport",
    "VerifyRow",
    "bench_configs",
    "load_instances",
    "read_manifest",
    "run_bench",
    "run_oracle",
    "run_sweep",
    "run_verify",
    "solve_instance",
    "write_manifest",
]
