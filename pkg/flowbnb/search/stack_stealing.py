"""
StackStealing coordination: idle workers ask a random victim for its shallowest open node
"""

import logging
import queue
from typing import TYPE_CHECKING, Optional

from ..config.config import SkeletonConfig
from ..core.instance import Instance
from ..core.node import SearchNode
from ..core.types import Coordination
from .base import Coordinator, Stack
from .workpool import Task

if TYPE_CHECKING:
    from .engine import SearchResult, Worker

logger = logging.getLogger(__name__)

RESPONSE_POLL = 0.0005


class StackStealingCoordinator(Coordinator):
    """
    Work moves only on request. A thief posts its index to the victim's
    request queue and waits; the victim answers at its next node-expansion
    boundary with the shallowest unexplored child on its stack, or None.
    Every request gets exactly one answer, including from idle victims.
    """

    coordination = Coordination.STACK_STEALING

    def run_task(self, worker: "Worker", task: Task) -> None:
        worker.dfs(task.node, poll=lambda stack: self.serve(worker, stack))

    def serve(self, victim: "Worker", stack: Optional[Stack]) -> None:
        """Answer every pending steal request"""
        requests = victim.requests
        if requests.empty():
            return
        while True:
            try:
                thief = requests.get_nowait()
            except queue.Empty:
                return
            node = self.shallowest(stack) if stack else None
            if node is not None:
                self.engine.counter.add(1)
                victim.metrics.tasks_spawned += 1
                self.engine.emit(
                    "steal", thief, victim=victim.index, depth=node.depth,
                    key=node.key(),
                )
            self.engine.workers[thief].responses.put(node)

    @staticmethod
    def shallowest(stack: Stack) -> Optional[SearchNode]:
        for _, children in stack:
            child = next(children, None)
            if child is not None:
                return child
        return None

    def acquire(self, worker: "Worker") -> Optional[Task]:
        task = worker.deque.pop()
        if task is not None:
            return task
        # answer anyone waiting on us before we go asking
        self.serve(worker, None)
        if len(self.engine.workers) == 1:
            return None

        victim = worker.pick_victim()
        worker.metrics.steals_attempted += 1
        self.engine.workers[victim].requests.put(worker.index)

        quiescent = self.engine.counter.quiescent
        stopped = self.engine.stopped
        while True:
            try:
                node = worker.responses.get(timeout=RESPONSE_POLL)
                break
            except queue.Empty:
                self.serve(worker, None)
                if quiescent.is_set() or stopped.is_set():
                    return None

        if node is None:
            return None
        worker.metrics.steals_succeeded += 1
        return Task(node)


def stackstealing_search(inst: Instance, config: SkeletonConfig) -> "SearchResult":
    from .engine import SearchEngine

    if config.coordination is not Coordination.STACK_STEALING:
        raise ValueError(f"expected a StackStealing config, got {config.coordination.value}")
    return SearchEngine(inst, config).run()
