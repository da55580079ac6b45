"""
flowbnb - parallel branch and bound for the permutation flowshop problem
"""

from .config import SkeletonConfig
from .core import (
    Coordination,
    FlowshopGenerator,
    Instance,
    NodeGenerator,
    Schedule,
    SearchNode,
    evaluate_makespan,
    exhaustive_search,
    neh_upper_bound,
    one_machine_bound,
    parse_instance,
    read_instance,
    write_instance,
)
from .search import IncumbentRegistry, SearchMetrics, SearchResult, search
from .bench import RunRecord, compute_stats

__version__ = "0.1.0"

__all__ = [
    "SkeletonConfig",
    "Coordination",
    "FlowshopGenerator",
    "Instance",
    "NodeGenerator",
    "Schedule",
    "SearchNode",
    "evaluate_makespan",
    "exhaustive_search",
    "neh_upper_bound",
    "one_machine_bound",
    "parse_instance",
    "read_instance",
    "write_instance",
    "IncumbentRegistry",
    "SearchMetrics",
    "SearchResult",
    "search",
    "RunRecord",
    "compute_stats",
]
