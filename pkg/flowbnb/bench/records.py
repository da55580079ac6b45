"""
RunRecord: one row per (instance, config, repeat), stored as CSV, JSON lines or Parquet
"""

import os
import platform
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..config.config import SkeletonConfig
from ..search.engine import SearchResult
from ..search.metrics import SearchMetrics


@dataclass
class RunRecord:
    """Result of a single search run plus the configuration that produced it"""

    instance_name: str
    coordination: str
    workers: int
    cutoff_depth: Optional[int]
    backtrack_budget: Optional[int]
    rng_seed: int
    repeat_index: int
    makespan: int
    proven_optimal: bool
    wall_time_seconds: float
    nodes_visited: int
    nodes_pruned: int
    tasks_spawned: int
    tasks_completed: int
    steals_attempted: int
    steals_succeeded: int
    backtracks: int
    spills: int
    spawn_pruned: int
    incumbent_updates: int
    permutation: str
    cpu_count: int
    platform: str

    @classmethod
    def from_result(
        cls,
        instance_name: str,
        config: SkeletonConfig,
        result: SearchResult,
        repeat_index: int = 0,
    ) -> "RunRecord":
        counters = result.metrics.counters()
        return cls(
            instance_name=instance_name,
            coordination=config.coordination.value,
            workers=config.workers,
            cutoff_depth=config.cutoff_depth,
            backtrack_budget=config.backtrack_budget,
            rng_seed=config.rng_seed,
            repeat_index=repeat_index,
            makespan=result.schedule.makespan,
            proven_optimal=result.proven_optimal,
            wall_time_seconds=max(result.metrics.wall_time, 1e-9),
            permutation=" ".join(str(j) for j in result.schedule.permutation),
            cpu_count=os.cpu_count() or 1,
            platform=platform.platform(),
            **counters,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunRecord":
        values: Dict[str, Any] = {}
        for f in fields(cls):
            value = data[f.name]
            if value is None or (not isinstance(value, str) and pd.isna(value)):
                values[f.name] = None
            elif f.name in INT_COLUMNS or f.name in OPTIONAL_INT_COLUMNS:
                values[f.name] = int(value)
            elif f.name == "wall_time_seconds":
                values[f.name] = float(value)
            elif f.name == "proven_optimal":
                values[f.name] = _as_bool(value)
            else:
                values[f.name] = str(value)
        return cls(**values)

    def metrics(self) -> SearchMetrics:
        data = {name: getattr(self, name) for name in SearchMetrics.COUNTERS}
        return SearchMetrics(wall_time=self.wall_time_seconds, **data)

    def config_label(self) -> str:
        """Skeleton and its parameter, without the worker count"""
        if self.cutoff_depth is not None:
            return f"{self.coordination}(d={self.cutoff_depth})"
        if self.backtrack_budget is not None:
            return f"{self.coordination}(b={self.backtrack_budget})"
        return self.coordination


# Fixed column order for every output format
RECORD_COLUMNS: List[str] = [f.name for f in fields(RunRecord)]
OPTIONAL_INT_COLUMNS = ("cutoff_depth", "backtrack_budget")
INT_COLUMNS = (
    "workers",
    "rng_seed",
    "repeat_index",
    "makespan",
    "cpu_count",
) + SearchMetrics.COUNTERS


def _as_bool(value: Any) -> bool:
    if isinstance(value, str):
        return value.strip().lower() in ("true", "1", "yes")
    return bool(value)


def records_to_frame(records: Sequence[RunRecord]) -> pd.DataFrame:
    frame = pd.DataFrame([r.to_dict() for r in records], columns=RECORD_COLUMNS)
    for column in OPTIONAL_INT_COLUMNS:
        frame[column] = frame[column].astype("Int64")
    # seeds may exceed int64
    frame["rng_seed"] = frame["rng_seed"].astype(object)
    return frame


def frame_to_records(frame: pd.DataFrame) -> List[RunRecord]:
    missing = [c for c in RECORD_COLUMNS if c not in frame.columns]
    if missing:
        raise ValueError(f"record table is missing columns: {', '.join(missing)}")
    return [RunRecord.from_dict(row) for row in frame[RECORD_COLUMNS].to_dict("records")]


def _format_of(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    formats = {".csv": "csv", ".jsonl": "jsonl", ".json": "jsonl", ".parquet": "parquet"}
    if ext not in formats:
        raise ValueError(f"Unsupported record format: {path} (use .csv, .jsonl or .parquet)")
    return formats[ext]


def records_to_csv(records: Sequence[RunRecord]) -> str:
    return records_to_frame(records).to_csv(index=False)


def write_records(records: Sequence[RunRecord], path: str) -> None:
    """Write records; the format follows the file extension"""
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    frame = records_to_frame(records)
    file_format = _format_of(path)
    if file_format == "csv":
        frame.to_csv(path, index=False)
    elif file_format == "jsonl":
        frame.to_json(path, orient="records", lines=True, double_precision=15)
    else:
        frame["rng_seed"] = frame["rng_seed"].astype(str)
        frame.to_parquet(path, index=False)


def read_records(path: str) -> List[RunRecord]:
    """Read records written by write_records"""
    if not os.path.exists(path):
        raise FileNotFoundError(f"Record file not found: {path}")
    file_format = _format_of(path)
    if file_format == "csv":
        frame = pd.read_csv(
            path,
            dtype={"permutation": str, "platform": str, "instance_name": str,
                   "coordination": str, "rng_seed": str},
            float_precision="round_trip",
        )
    elif file_format == "jsonl":
        frame = pd.read_json(path, orient="records", lines=True, dtype=False)
    else:
        frame = pd.read_parquet(path)
    return frame_to_records(frame)
