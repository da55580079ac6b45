"""
Base classes for search coordinations
"""

import time
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Callable, Iterator, List, Optional, Tuple

from ..core.generator import NodeGenerator
from ..core.node import SearchNode
from ..core.types import Coordination
from .incumbent import IncumbentRegistry
from .metrics import SearchMetrics
from .trace import TraceRecorder
from .workpool import Task

if TYPE_CHECKING:
    from .engine import SearchEngine, Worker

Frame = Tuple[SearchNode, Iterator[SearchNode]]
Stack = List[Frame]

DEADLINE_CHECK_EVERY = 1024


class Explorer:
    """
    Depth-first exploration state of one worker: the generator, a cached
    incumbent value, and the worker's own metrics.
    """

    def __init__(
        self,
        generator: NodeGenerator,
        incumbent: IncumbentRegistry,
        metrics: Optional[SearchMetrics] = None,
        share_incumbent: bool = True,
        deadline: Optional[float] = None,
        trace: Optional[TraceRecorder] = None,
        index: int = 0,
    ):
        self.generator = generator
        self.incumbent = incumbent
        self.metrics = metrics if metrics is not None else SearchMetrics()
        self.share_incumbent = share_incumbent
        self.deadline = deadline
        self.trace = trace
        self.index = index
        self.bound = incumbent.best_makespan
        self.halted = False
        self.stack: Stack = []

    def halt(self) -> None:
        self.halted = True

    def _deadline_passed(self) -> bool:
        return self.deadline is not None and time.monotonic() >= self.deadline

    def on_deadline(self) -> None:
        self.halt()

    def visit(self, node: SearchNode) -> bool:
        """
        Count a visit and decide whether to expand node.
        Complete nodes are offered to the incumbent and never expanded.
        """
        metrics = self.metrics
        metrics.nodes_visited += 1
        if self.deadline is not None and metrics.nodes_visited % DEADLINE_CHECK_EVERY == 0:
            if self._deadline_passed():
                self.on_deadline()

        if self.share_incumbent:
            shared = self.incumbent.best_makespan
            if shared < self.bound:
                self.bound = shared

        if self.generator.is_complete(node):
            schedule = self.generator.objective(node)
            if schedule.makespan < self.bound:
                self.bound = schedule.makespan
                if self.incumbent.offer(schedule):
                    metrics.incumbent_updates += 1
                    if self.trace is not None:
                        self.trace.emit("incumbent", self.index, makespan=schedule.makespan)
            return False

        if self.generator.bound(node) >= self.bound:
            metrics.nodes_pruned += 1
            return False
        return True

    def dfs(
        self,
        root: SearchNode,
        poll: Optional[Callable[[Stack], None]] = None,
        budget: Optional[int] = None,
    ) -> Optional[Stack]:
        """
        Depth-first search of root's subtree, children in generator order.

        poll runs at every node-expansion boundary with the live stack.
        When budget is given and this call has backtracked that many times,
        the search stops and the unexplored stack is returned.
        """
        self.stack = []
        if not self.visit(root):
            return None
        stack = self.stack
        stack.append((root, self.generator.children(root)))
        backtracks = 0
        metrics = self.metrics

        while stack:
            if self.halted:
                return None
            if poll is not None:
                poll(stack)
            _, children = stack[-1]
            child = next(children, None)
            if child is None:
                stack.pop()
                metrics.backtracks += 1
                backtracks += 1
                if budget is not None and backtracks >= budget and stack:
                    return stack
                continue
            if self.visit(child):
                stack.append((child, self.generator.children(child)))
        return None


class Coordinator(ABC):
    """
    Abstract base class for search coordinations.
    A coordination decides when subtrees become tasks and how idle workers
    find work; the engine owns threads, quiescence and results.
    """

    coordination: Coordination

    def __init__(self, engine: "SearchEngine"):
        self.engine = engine

    def seed(self, root: Task) -> None:
        """Hand the root task to worker 0"""
        first = self.engine.workers[0]
        self.engine.counter.add(1)
        first.metrics.tasks_spawned += 1
        first.deque.push(root)

    @abstractmethod
    def run_task(self, worker: "Worker", task: Task) -> None:
        """Explore one task's subtree"""
        pass

    def acquire(self, worker: "Worker") -> Optional[Task]:
        """Next task: local deque first, else one steal from a random victim"""
        task = worker.deque.pop()
        if task is not None:
            return task
        if len(self.engine.workers) == 1:
            return None
        victim = worker.pick_victim()
        worker.metrics.steals_attempted += 1
        task = self.engine.workers[victim].deque.steal()
        if task is not None:
            worker.metrics.steals_succeeded += 1
            self.engine.emit("steal", worker.index, victim=victim, depth=task.node.depth)
        return task

    def spawn(self, worker: "Worker", nodes: List[SearchNode]) -> None:
        """
        Make nodes stealable tasks on worker's deque. nodes is given in the
        order thieves should take them; the owner pops from the other end.
        """
        if not nodes:
            return
        self.engine.counter.add(len(nodes))
        worker.metrics.tasks_spawned += len(nodes)
        worker.deque.push_all(Task(node) for node in nodes)
        if self.engine.trace is not None:
            for node in nodes:
                self.engine.emit("spawn", worker.index, depth=node.depth, key=node.key())

    def __str__(self) -> str:
        return f"{self.__class__.__name__}()"
