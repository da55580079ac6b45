"""
Summary statistics over benchmark records
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from ..core.types import Coordination
from .records import RunRecord


def geometric_mean(values: Iterable[float]) -> float:
    """exp of the mean log; every value must be positive"""
    arr = np.asarray(list(values), dtype=np.float64)
    if arr.size == 0:
        raise ValueError("geometric mean of an empty sequence")
    if np.any(arr <= 0):
        raise ValueError("geometric mean needs positive values")
    return float(np.exp(np.log(arr).mean()))


@dataclass
class CellStats:
    """Timing for one (instance, skeleton, workers) cell"""

    instance_name: str
    config_label: str
    coordination: str
    workers: int
    runs: int
    min_time: float
    median_time: float
    max_time: float
    makespan: int
    speedup: float


@dataclass
class BenchSummary:
    cells: List[CellStats] = field(default_factory=list)
    # "<config_label>/<workers>" -> geometric mean of speedup across instances
    geomean_speedup: Dict[str, float] = field(default_factory=dict)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([asdict(c) for c in self.cells])

    def geomean_frame(self) -> pd.DataFrame:
        rows = [{"config": key, "geomean_speedup": value}
                for key, value in self.geomean_speedup.items()]
        return pd.DataFrame(rows, columns=["config", "geomean_speedup"])

    def cell(self, instance_name: str, config_label: str, workers: int) -> CellStats:
        for c in self.cells:
            if (c.instance_name, c.config_label, c.workers) == (instance_name, config_label, workers):
                return c
        raise KeyError(f"no cell for {instance_name} {config_label}/{workers}")


def _baseline_time(
    medians: Dict[Tuple[str, str, int], float],
    instance_name: str,
    config_label: str,
    baseline_workers: int,
) -> Optional[float]:
    same_skeleton = medians.get((instance_name, config_label, baseline_workers))
    if same_skeleton is not None:
        return same_skeleton
    return medians.get((instance_name, Coordination.SEQUENTIAL.value, 1))


def compute_stats(records: Sequence[RunRecord], baseline_workers: int = 1) -> BenchSummary:
    """
    Group records by (instance, skeleton, workers) and summarise wall times.

    Speedup of a cell is the baseline median over the cell median. The
    baseline is the same skeleton at baseline_workers, falling back to a
    Sequential run of the instance.

    Raises:
        ValueError: no records, or a cell without any baseline run
    """
    if not records:
        raise ValueError("no records to summarise")

    frame = pd.DataFrame(
        {
            "instance_name": [r.instance_name for r in records],
            "config_label": [r.config_label() for r in records],
            "coordination": [r.coordination for r in records],
            "workers": [r.workers for r in records],
            "wall_time_seconds": [r.wall_time_seconds for r in records],
            "makespan": [r.makespan for r in records],
        }
    )
    grouped = frame.groupby(["instance_name", "config_label", "coordination", "workers"], sort=True)

    medians: Dict[Tuple[str, str, int], float] = {}
    groups = []
    for (instance_name, label, coordination, workers), group in grouped:
        times = group["wall_time_seconds"].to_numpy(dtype=np.float64)
        median = float(np.median(times))
        medians[(instance_name, label, int(workers))] = median
        groups.append((instance_name, label, coordination, int(workers), times, median, group))

    summary = BenchSummary()
    per_config: Dict[str, List[float]] = {}
    for instance_name, label, coordination, workers, times, median, group in groups:
        baseline = _baseline_time(medians, instance_name, label, baseline_workers)
        if baseline is None:
            raise ValueError(
                f"missing baseline runs for {instance_name} {label}: "
                f"need {baseline_workers} worker(s) or a sequential run"
            )
        speedup = baseline / median
        summary.cells.append(
            CellStats(
                instance_name=instance_name,
                config_label=label,
                coordination=coordination,
                workers=workers,
                runs=len(times),
                min_time=float(times.min()),
                median_time=median,
                max_time=float(times.max()),
                makespan=int(group["makespan"].min()),
                speedup=speedup,
            )
        )
        per_config.setdefault(f"{label}/{workers}", []).append(speedup)

    summary.geomean_speedup = {key: geometric_mean(v) for key, v in sorted(per_config.items())}
    return summary
