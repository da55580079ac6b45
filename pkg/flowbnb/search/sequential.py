"""
Sequential coordination: one depth-first search from the root
"""

from typing import TYPE_CHECKING, Optional

from ..core.generator import FlowshopGenerator, NodeGenerator
from ..core.instance import Instance
from ..core.node import SearchNode
from ..core.types import Coordination
from .base import Coordinator, Explorer
from .incumbent import IncumbentRegistry
from .metrics import SearchMetrics
from .workpool import Task

if TYPE_CHECKING:
    from .engine import Worker


def sequential_dfs(
    inst: Instance,
    node: SearchNode,
    incumbent: IncumbentRegistry,
    metrics: Optional[SearchMetrics] = None,
    generator: Optional[NodeGenerator] = None,
) -> SearchMetrics:
    """
    Explore node's subtree depth-first, children in generator order.

    Each node is counted as visited; complete nodes are offered to the
    incumbent; nodes whose bound reaches the incumbent are pruned; a
    backtrack is counted whenever a node's children are exhausted.
    """
    explorer = Explorer(generator or FlowshopGenerator(inst), incumbent, metrics)
    explorer.dfs(node)
    return explorer.metrics


class SequentialCoordinator(Coordinator):
    """Single task, never split"""

    coordination = Coordination.SEQUENTIAL

    def run_task(self, worker: "Worker", task: Task) -> None:
        worker.dfs(task.node)
