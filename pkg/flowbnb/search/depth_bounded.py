"""
DepthBounded coordination: every node above the cutoff depth spawns its children as tasks
"""

import logging
from typing import TYPE_CHECKING, List

from ..config.config import SkeletonConfig
from ..core.instance import Instance
from ..core.node import SearchNode
from ..core.types import Coordination
from .base import Coordinator
from .workpool import Task

if TYPE_CHECKING:
    from .engine import SearchEngine, SearchResult, Worker

logger = logging.getLogger(__name__)


class DepthBoundedCoordinator(Coordinator):
    """
    A task rooted above cutoff_depth is expanded by turning each child that
    survives the bound check into a task; deeper tasks run depth-first inline.
    """

    coordination = Coordination.DEPTH_BOUNDED

    def __init__(self, engine: "SearchEngine"):
        super().__init__(engine)
        self.cutoff_depth = engine.config.cutoff_depth

    def run_task(self, worker: "Worker", task: Task) -> None:
        node = task.node
        if node.depth >= self.cutoff_depth:
            worker.dfs(node)
            return
        if not worker.visit(node):
            return

        generator = worker.generator
        metrics = worker.metrics
        spawned: List[SearchNode] = []
        for child in generator.children(node):
            if generator.bound(child) >= worker.bound:
                # counted here since the child never becomes a task
                metrics.nodes_visited += 1
                metrics.nodes_pruned += 1
                metrics.spawn_pruned += 1
                continue
            spawned.append(child)
        # thieves take from the far end, so the owner resumes with the first child
        self.spawn(worker, spawned[::-1])


def depthbounded_search(inst: Instance, config: SkeletonConfig) -> "SearchResult":
    from .engine import SearchEngine

    if config.coordination is not Coordination.DEPTH_BOUNDED:
        raise ValueError(f"expected a DepthBounded config, got {config.coordination.value}")
    return SearchEngine(inst, config).run()
