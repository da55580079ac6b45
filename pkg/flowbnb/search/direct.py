"""
Direct branch and bound: a hand-written recursive solver without the
generator interface or the engine, used to measure framework overhead.
"""

import logging
import sys
import time
from typing import List, Optional, Sequence

from ..config.config import SkeletonConfig
from ..core.bound import bound_from_parts
from ..core.heuristics import neh_upper_bound
from ..core.instance import Instance
from ..core.makespan import append_job, prepend_job
from ..core.types import Coordination, Schedule
from .metrics import SearchMetrics

logger = logging.getLogger(__name__)


class _OutOfTime(Exception):
    pass


class DirectSolver:
    """Visits exactly the nodes the Sequential coordination visits"""

    def __init__(self, inst: Instance, deadline: Optional[float] = None):
        self.inst = inst
        self.rows = inst.rows
        self.deadline = deadline
        self.metrics = SearchMetrics()
        self.best = neh_upper_bound(inst)

    def solve(self) -> bool:
        """Returns True when the search completed"""
        inst = self.inst
        zeros = [0] * inst.num_machines
        unscheduled = list(range(inst.num_jobs))
        remaining = list(inst.machine_work)
        limit = sys.getrecursionlimit()
        if inst.num_jobs + 50 > limit:
            sys.setrecursionlimit(inst.num_jobs + 100)
        try:
            self._node([], [], unscheduled, 0, zeros, zeros, remaining)
        except _OutOfTime:
            return False
        return True

    def _node(
        self,
        sigma1: List[int],
        sigma2_rev: List[int],
        unscheduled: List[int],
        depth: int,
        front: Sequence[int],
        back: Sequence[int],
        remaining: Sequence[int],
    ) -> None:
        metrics = self.metrics
        metrics.nodes_visited += 1
        if self.deadline is not None and metrics.nodes_visited % 1024 == 0:
            if time.monotonic() >= self.deadline:
                raise _OutOfTime()

        if not unscheduled:
            makespan = max(f + b for f, b in zip(front, back))
            if makespan < self.best.makespan:
                self.best = Schedule(tuple(sigma1) + tuple(reversed(sigma2_rev)), makespan)
                metrics.incumbent_updates += 1
            return
        if bound_from_parts(self.inst, unscheduled, front, back, remaining) >= self.best.makespan:
            metrics.nodes_pruned += 1
            return

        rows = self.rows
        child_depth = depth + 1
        to_front = child_depth % 2 == 1
        for index, job in enumerate(unscheduled):
            rest = unscheduled[:index] + unscheduled[index + 1 :]
            p = rows[job]
            left = [r - p[k] for k, r in enumerate(remaining)]
            if to_front:
                sigma1.append(job)
                self._node(sigma1, sigma2_rev, rest, child_depth,
                           append_job(rows, front, job), back, left)
                sigma1.pop()
            else:
                sigma2_rev.append(job)
                self._node(sigma1, sigma2_rev, rest, child_depth,
                           front, prepend_job(rows, back, job), left)
                sigma2_rev.pop()
        metrics.backtracks += 1


def direct_search(inst: Instance, config: Optional[SkeletonConfig] = None):
    """Solve with DirectSolver; returns a SearchResult like search()"""
    from .engine import SearchResult

    config = config or SkeletonConfig(coordination=Coordination.DIRECT)
    start = time.perf_counter()
    deadline = time.monotonic() + config.time_limit if config.time_limit else None
    solver = DirectSolver(inst, deadline)
    completed = solver.solve()
    if not completed:
        logger.warning("time limit of %ss reached, stopping search", config.time_limit)
    solver.metrics.wall_time = time.perf_counter() - start
    return SearchResult(
        schedule=solver.best,
        proven_optimal=completed,
        metrics=solver.metrics,
        config_echo=config,
    )
