"""
Search counters, kept per worker and merged at quiescence
"""

from dataclasses import dataclass, fields
from typing import Any, Dict, Iterable


@dataclass
class SearchMetrics:
    """Counters describing one search (or one worker's share of it)"""

    nodes_visited: int = 0
    nodes_pruned: int = 0
    tasks_spawned: int = 0
    tasks_completed: int = 0
    steals_attempted: int = 0
    steals_succeeded: int = 0
    backtracks: int = 0
    spills: int = 0
    spawn_pruned: int = 0
    incumbent_updates: int = 0
    wall_time: float = 0.0

    COUNTERS = (
        "nodes_visited",
        "nodes_pruned",
        "tasks_spawned",
        "tasks_completed",
        "steals_attempted",
        "steals_succeeded",
        "backtracks",
        "spills",
        "spawn_pruned",
        "incumbent_updates",
    )

    def merge(self, other: "SearchMetrics") -> None:
        """Add another worker's counters into this one"""
        for name in self.COUNTERS:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    @classmethod
    def combine(cls, parts: Iterable["SearchMetrics"]) -> "SearchMetrics":
        total = cls()
        for part in parts:
            total.merge(part)
        return total

    def counters(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in self.COUNTERS}

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = self.counters()
        data["wall_time"] = self.wall_time
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchMetrics":
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in names})

    def __str__(self) -> str:
        return (
            f"visited={self.nodes_visited} pruned={self.nodes_pruned} "
            f"tasks={self.tasks_spawned} steals={self.steals_succeeded}/{self.steals_attempted} "
            f"backtracks={self.backtracks} incumbents={self.incumbent_updates} "
            f"time={self.wall_time:.3f}s"
        )
