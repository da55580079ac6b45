"""
Shared incumbent: the best complete schedule found so far
"""

import logging
import threading
from typing import List

from ..core.types import Schedule

logger = logging.getLogger(__name__)


class IncumbentRegistry:
    """
    Monotone-decreasing best makespan shared by all workers.

    Reads of best_makespan are lock-free; a stale read is always an upper
    value, which can only make a worker prune less. Offers are serialised.
    """

    def __init__(self, initial: Schedule):
        self._best = initial
        self.best_makespan = initial.makespan
        self._history: List[int] = [initial.makespan]
        self._lock = threading.Lock()

    @property
    def best_schedule(self) -> Schedule:
        return self._best

    def offer(self, schedule: Schedule) -> bool:
        """Install schedule if it strictly improves the incumbent"""
        if schedule.makespan >= self.best_makespan:
            return False
        with self._lock:
            if schedule.makespan >= self.best_makespan:
                return False
            self._best = schedule
            self.best_makespan = schedule.makespan
            self._history.append(schedule.makespan)
        logger.debug("incumbent improved to %d", schedule.makespan)
        return True

    def history(self) -> List[int]:
        """Accepted makespans in acceptance order, starting with the initial value"""
        with self._lock:
            return list(self._history)

    def __str__(self) -> str:
        return f"IncumbentRegistry(best={self.best_makespan})"


def offer_incumbent(registry: IncumbentRegistry, schedule: Schedule) -> bool:
    return registry.offer(schedule)
