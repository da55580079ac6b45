"""
Core types for the flowshop branch-and-bound framework
"""

from enum import Enum
from typing import Any, Dict, Sequence, Tuple
from dataclasses import dataclass


class Coordination(Enum):
    """Search coordinations: how subtrees become tasks"""

    SEQUENTIAL = "seq"
    DEPTH_BOUNDED = "depthbounded"
    BUDGET = "budget"
    STACK_STEALING = "stackstealing"
    DIRECT = "direct"

    @classmethod
    def parse(cls, value: "str | Coordination") -> "Coordination":
        """Accept enum members, CLI names, or enum member names"""
        if isinstance(value, Coordination):
            return value
        text = str(value).strip().lower()
        aliases = {
            "sequential": cls.SEQUENTIAL,
            "depth_bounded": cls.DEPTH_BOUNDED,
            "stack_stealing": cls.STACK_STEALING,
        }
        if text in aliases:
            return aliases[text]
        try:
            return cls(text)
        except ValueError:
            choices = ", ".join(c.value for c in cls)
            raise ValueError(f"Unknown coordination '{value}' (choose from {choices})")

    @property
    def is_single_worker(self) -> bool:
        return self in (Coordination.SEQUENTIAL, Coordination.DIRECT)


# Type aliases
JobList = Sequence[int]
MachineTimes = Tuple[int, ...]


@dataclass(frozen=True)
class Schedule:
    """A complete job permutation and its makespan"""

    permutation: Tuple[int, ...]
    makespan: int

    def __str__(self) -> str:
        jobs = " ".join(str(j) for j in self.permutation)
        return f"Schedule(makespan={self.makespan}, permutation=[{jobs}])"

    def to_dict(self) -> Dict[str, Any]:
        return {"permutation": list(self.permutation), "makespan": self.makespan}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Schedule":
        return cls(
            permutation=tuple(int(j) for j in data["permutation"]),
            makespan=int(data["makespan"]),
        )
