"""
Task pool: per-worker deques and the outstanding-task counter
"""

import threading
from collections import deque
from dataclasses import dataclass
from typing import Deque, Iterable, Optional

from ..core.node import SearchNode


@dataclass(frozen=True)
class Task:
    """Root of a subtree to explore; owned by exactly one worker at a time"""

    node: SearchNode


class WorkDeque:
    """
    Owner pushes and pops at the right end, thieves steal from the left.
    Every task is handed out exactly once.
    """

    def __init__(self):
        self._tasks: Deque[Task] = deque()
        self._lock = threading.Lock()

    def push(self, task: Task) -> None:
        with self._lock:
            self._tasks.append(task)

    def push_all(self, tasks: Iterable[Task]) -> None:
        with self._lock:
            self._tasks.extend(tasks)

    def pop(self) -> Optional[Task]:
        with self._lock:
            return self._tasks.pop() if self._tasks else None

    def steal(self) -> Optional[Task]:
        with self._lock:
            return self._tasks.popleft() if self._tasks else None

    def __len__(self) -> int:
        return len(self._tasks)


class TaskCounter:
    """
    Outstanding-task counter used for quiescence detection.

    Incremented when a task is created, decremented when one finishes. The
    `quiescent` event is set when the count returns to zero; since every
    task is counted before it becomes visible to anyone, a zero count means
    no worker holds or can obtain work.
    """

    def __init__(self):
        self._count = 0
        self.increments = 0
        self.decrements = 0
        self._lock = threading.Lock()
        self.quiescent = threading.Event()

    def add(self, k: int = 1) -> None:
        if k <= 0:
            return
        with self._lock:
            self._count += k
            self.increments += k

    def done(self) -> int:
        with self._lock:
            if self._count <= 0:
                raise RuntimeError("task counter went negative")
            self._count -= 1
            self.decrements += 1
            remaining = self._count
        if remaining == 0:
            self.quiescent.set()
        return remaining

    @property
    def outstanding(self) -> int:
        return self._count

    @property
    def movements(self) -> int:
        return self.increments + self.decrements
