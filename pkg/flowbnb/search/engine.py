"""
SearchEngine - worker pool, termination detection and the search() entry point
"""

import logging
import queue
import threading
import time
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..config.config import SkeletonConfig
from ..core.errors import SearchDeadlockError
from ..core.generator import FlowshopGenerator, NodeGenerator
from ..core.heuristics import neh_upper_bound
from ..core.instance import Instance
from ..core.types import Coordination, Schedule
from .base import Coordinator, Explorer
from .incumbent import IncumbentRegistry
from .metrics import SearchMetrics
from .trace import TraceRecorder
from .workpool import Task, TaskCounter, WorkDeque

logger = logging.getLogger(__name__)

IDLE_SLEEP = 0.0002
SUPERVISE_TICK = 0.05


@dataclass
class SearchResult:
    """Outcome of a search: best schedule, whether it is proven, and counters"""

    schedule: Schedule
    proven_optimal: bool
    metrics: SearchMetrics
    config_echo: SkeletonConfig

    @property
    def makespan(self) -> int:
        return self.schedule.makespan

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schedule": self.schedule.to_dict(),
            "proven_optimal": self.proven_optimal,
            "metrics": self.metrics.to_dict(),
            "config": self.config_echo.to_dict(),
        }

    def __str__(self) -> str:
        status = "optimal" if self.proven_optimal else "unproven"
        return f"SearchResult({self.schedule.makespan}, {status}, {self.metrics})"


class Worker(Explorer):
    """One search worker: an explorer plus its deque, steal mailbox and RNG"""

    def __init__(self, engine: "SearchEngine", index: int):
        super().__init__(
            generator=engine.generator,
            incumbent=engine.incumbent,
            share_incumbent=engine.config.share_incumbent,
            deadline=engine.deadline,
            trace=engine.trace,
            index=index,
        )
        self.engine = engine
        self.deque = WorkDeque()
        # stack-stealing mailboxes: thief indices in, stolen node (or None) out
        self.requests: "queue.SimpleQueue[int]" = queue.SimpleQueue()
        self.responses: "queue.SimpleQueue[Any]" = queue.SimpleQueue()
        self.rng = np.random.default_rng(engine.config.rng_seed + index)
        self.state = "idle"

    def pick_victim(self) -> int:
        """Uniformly random other worker"""
        others = len(self.engine.workers) - 1
        victim = int(self.rng.integers(0, others))
        return victim + 1 if victim >= self.index else victim

    def on_deadline(self) -> None:
        self.engine.halt(timed_out=True)

    def describe(self) -> Dict[str, Any]:
        return {
            "worker": self.index,
            "state": self.state,
            "deque": len(self.deque),
            "stack_depth": len(self.stack),
            "pending_requests": self.requests.qsize(),
            "nodes_visited": self.metrics.nodes_visited,
            "bound": self.bound,
        }


class SearchEngine:
    """
    Runs one coordination over a node generator with config.workers workers.

    Single-worker runs execute in the calling thread; otherwise each worker
    is a thread and the calling thread supervises termination.
    """

    def __init__(
        self,
        inst: Instance,
        config: SkeletonConfig,
        generator: Optional[NodeGenerator] = None,
        trace: Optional[TraceRecorder] = None,
    ):
        config.validate()
        self.inst = inst
        self.config = config
        self.generator = generator or FlowshopGenerator(inst)
        self.trace = trace or (TraceRecorder(config.trace_path) if config.trace_path else None)
        self.incumbent = IncumbentRegistry(neh_upper_bound(inst))
        self.counter = TaskCounter()
        self.deadline: Optional[float] = None
        self.timed_out = False
        self.stopped = threading.Event()
        self.workers: List[Worker] = []
        self.coordinator: Optional[Coordinator] = None
        self._errors: List[BaseException] = []

    def emit(self, event: str, worker: int, **fields: Any) -> None:
        if self.trace is not None:
            self.trace.emit(event, worker, **fields)

    def halt(self, timed_out: bool = False) -> None:
        """Stop every worker at its next node boundary"""
        if timed_out and not self.timed_out:
            self.timed_out = True
            logger.warning("time limit of %ss reached, stopping search", self.config.time_limit)
        self.stopped.set()
        for worker in self.workers:
            worker.halt()

    def run(self) -> SearchResult:
        from .coordinations import make_coordinator

        config = self.config
        start = time.perf_counter()
        if config.time_limit is not None:
            self.deadline = time.monotonic() + config.time_limit
        self.workers = [Worker(self, i) for i in range(config.workers)]
        self.coordinator = make_coordinator(config.coordination, self)

        logger.info(
            "searching %s with %s (initial incumbent %d)",
            self.inst.name,
            config,
            self.incumbent.best_makespan,
        )
        self.coordinator.seed(Task(self.generator.root()))

        try:
            if len(self.workers) == 1:
                self._worker_loop(self.workers[0])
            else:
                threads = [
                    threading.Thread(
                        target=self._worker_loop,
                        args=(worker,),
                        name=f"flowbnb-worker-{worker.index}",
                        daemon=True,
                    )
                    for worker in self.workers
                ]
                for thread in threads:
                    thread.start()
                try:
                    self.run_termination(threads)
                finally:
                    self.halt()
                    for thread in threads:
                        thread.join()
        finally:
            if self.trace is not None:
                self.trace.close()

        if self._errors:
            raise self._errors[0]

        metrics = SearchMetrics.combine(worker.metrics for worker in self.workers)
        metrics.wall_time = time.perf_counter() - start
        proven = not self.timed_out and self.counter.quiescent.is_set()
        result = SearchResult(
            schedule=self.incumbent.best_schedule,
            proven_optimal=proven,
            metrics=metrics,
            config_echo=config,
        )
        logger.info("finished %s: %s", self.inst.name, result)
        return result

    def _worker_loop(self, worker: Worker) -> None:
        logger.debug("worker %d started", worker.index)
        coordinator = self.coordinator
        quiescent = self.counter.quiescent
        try:
            while not quiescent.is_set() and not self.stopped.is_set():
                task = coordinator.acquire(worker)
                if task is None:
                    worker.state = "idle"
                    time.sleep(IDLE_SLEEP)
                    continue
                worker.state = "busy"
                self.emit("task", worker.index, depth=task.node.depth,
                          key=task.node.key())
                coordinator.run_task(worker, task)
                worker.metrics.tasks_completed += 1
                self.counter.done()
                worker.state = "idle"
        except BaseException as exc:
            logger.exception("worker %d failed", worker.index)
            self._errors.append(exc)
            self.halt()
        worker.state = "exited"
        logger.debug("worker %d exiting: %s", worker.index, worker.metrics)

    def _progress(self) -> int:
        return self.counter.movements + sum(w.metrics.nodes_visited for w in self.workers)

    def run_termination(self, threads: List[threading.Thread]) -> bool:
        """
        Wait for quiescence: zero outstanding tasks with every worker idle.

        Returns False when the search was stopped instead (time limit or a
        worker error). Raises SearchDeadlockError when neither the task
        counter nor any node count moves for a whole watchdog interval.
        """
        interval = self.config.watchdog_interval
        last_progress = self._progress()
        last_change = time.monotonic()

        while True:
            if self.counter.quiescent.wait(timeout=SUPERVISE_TICK):
                return True
            if self.stopped.is_set():
                return False
            now = time.monotonic()
            if self.deadline is not None and now >= self.deadline:
                self.halt(timed_out=True)
                return False
            progress = self._progress()
            if progress != last_progress:
                last_progress, last_change = progress, now
            elif now - last_change >= interval:
                dump = [worker.describe() for worker in self.workers]
                dump.append({"outstanding_tasks": self.counter.outstanding})
                logger.warning("no search progress for %.1fs", interval)
                self.halt()
                raise SearchDeadlockError(
                    f"no progress for {interval}s with {self.counter.outstanding} outstanding tasks",
                    dump,
                )


def search(
    inst: Instance,
    config: SkeletonConfig,
    trace: Optional[TraceRecorder] = None,
) -> SearchResult:
    """
    Solve inst exactly with the configured coordination.

    The incumbent starts from NEH. The result is proven optimal when the
    search reaches quiescence before any time limit.
    """
    config.validate()
    if config.coordination is Coordination.DIRECT:
        from .direct import direct_search

        return direct_search(inst, config)
    return SearchEngine(inst, config, trace=trace).run()
