"""
Budget coordination: a task that backtracks `budget` times spills its stack as new tasks
"""

import logging
from typing import TYPE_CHECKING, List

from ..config.config import SkeletonConfig
from ..core.instance import Instance
from ..core.node import SearchNode
from ..core.types import Coordination
from .base import Coordinator, Stack
from .workpool import Task

if TYPE_CHECKING:
    from .engine import SearchEngine, SearchResult, Worker

logger = logging.getLogger(__name__)


class BudgetCoordinator(Coordinator):
    """Runs each task depth-first until its backtrack budget is spent, then spills"""

    coordination = Coordination.BUDGET

    def __init__(self, engine: "SearchEngine"):
        super().__init__(engine)
        self.budget = engine.config.backtrack_budget

    def run_task(self, worker: "Worker", task: Task) -> None:
        leftover = worker.dfs(task.node, budget=self.budget)
        if leftover:
            self.spill(worker, leftover)

    def spill(self, worker: "Worker", stack: Stack) -> int:
        """
        Turn every unexplored alternative on the stack into a task and end
        the current task. Frames are taken shallowest first; the generators
        resume where they stopped, so no child is produced twice.
        """
        nodes: List[SearchNode] = []
        for _, children in stack:
            remaining = list(children)
            nodes.extend(reversed(remaining))
        stack.clear()
        if not nodes:
            return 0
        worker.metrics.spills += 1
        self.spawn(worker, nodes)
        self.engine.emit("spill", worker.index, tasks=len(nodes))
        logger.debug("worker %d spilled %d tasks", worker.index, len(nodes))
        return len(nodes)


def budget_search(inst: Instance, config: SkeletonConfig) -> "SearchResult":
    from .engine import SearchEngine

    if config.coordination is not Coordination.BUDGET:
        raise ValueError(f"expected a Budget config, got {config.coordination.value}")
    return SearchEngine(inst, config).run()
