"""
Search module: the parallel branch-and-bound engine and its coordinations
"""

from .metrics import SearchMetrics
from .incumbent import IncumbentRegistry, offer_incumbent
from .trace import TraceRecorder
from .workpool import Task, TaskCounter, WorkDeque
from .base import Coordinator, Explorer
from .sequential import SequentialCoordinator, sequential_dfs
from .depth_bounded import DepthBoundedCoordinator, depthbounded_search
from .budget import BudgetCoordinator, budget_search
from .stack_stealing import StackStealingCoordinator, stackstealing_search
from .direct import DirectSolver, direct_search
from .engine import SearchEngine, SearchResult, Worker, search

__all__ = [
    "SearchMetrics",
    "IncumbentRegistry",
    "offer_incumbent",
    "TraceRecorder",
    "Task",
    "TaskCounter",
    "WorkDeque",
    "Coordinator",
    "Explorer",
    "SequentialCoordinator",
    "sequential_dfs",
    "DepthBoundedCoordinator",
    "depthbounded_search",
    "BudgetCoordinator",
    "budget_search",
    "StackStealingCoordinator",
    "stackstealing_search",
    "DirectSolver",
    "direct_search",
    "SearchEngine",
    "SearchResult",
    "Worker",
    "search",
]
