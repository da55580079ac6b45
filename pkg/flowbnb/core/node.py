"""
Two-sided partial schedules explored by the search
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SearchNode:
    """
    A partial schedule sigma1 + U + sigma2.

    sigma1 executes first; sigma2_rev stores the final block in reverse
    discovery order, so sigma2_rev[0] is the job that executes last.
    front/back cache forward_completion(sigma1) and backward_tail(sigma2_rev);
    remaining caches the per-machine work of the unscheduled jobs.
    """

    sigma1: Tuple[int, ...]
    sigma2_rev: Tuple[int, ...]
    unscheduled: Tuple[int, ...]
    depth: int
    front: Tuple[int, ...]
    back: Tuple[int, ...]
    remaining: Tuple[int, ...]
    lower_bound: int

    @property
    def is_complete(self) -> bool:
        return not self.unscheduled

    def schedule(self) -> Tuple[int, ...]:
        """Full permutation of a complete node"""
        if self.unscheduled:
            raise ValueError(f"node at depth {self.depth} is not complete")
        return self.sigma1 + tuple(reversed(self.sigma2_rev))

    def makespan(self) -> int:
        if self.unscheduled:
            raise ValueError(f"node at depth {self.depth} is not complete")
        return max(f + b for f, b in zip(self.front, self.back))

    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Identifies the subtree rooted at this node"""
        return (self.sigma1, self.sigma2_rev)

    def __str__(self) -> str:
        head = " ".join(map(str, self.sigma1))
        tail = " ".join(map(str, reversed(self.sigma2_rev)))
        gap = " ".join(map(str, self.unscheduled))
        return f"Node(d={self.depth}, lb={self.lower_bound}, [{head}] {{{gap}}} [{tail}])"
