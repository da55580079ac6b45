"""
Coordination registry
"""

from typing import TYPE_CHECKING, Dict, Type

from ..core.types import Coordination
from .base import Coordinator
from .budget import BudgetCoordinator
from .depth_bounded import DepthBoundedCoordinator
from .sequential import SequentialCoordinator
from .stack_stealing import StackStealingCoordinator

if TYPE_CHECKING:
    from .engine import SearchEngine

COORDINATORS: Dict[Coordination, Type[Coordinator]] = {
    Coordination.SEQUENTIAL: SequentialCoordinator,
    Coordination.DEPTH_BOUNDED: DepthBoundedCoordinator,
    Coordination.BUDGET: BudgetCoordinator,
    Coordination.STACK_STEALING: StackStealingCoordinator,
}


def make_coordinator(coordination: Coordination, engine: "SearchEngine") -> Coordinator:
    try:
        cls = COORDINATORS[coordination]
    except KeyError:
        raise ValueError(f"Coordination '{coordination.value}' does not run on the engine")
    return cls(engine)
