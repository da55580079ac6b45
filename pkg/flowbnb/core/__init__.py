"""
Core module: flowshop instances and the search-tree kernel
"""

from .types import Coordination, Schedule
from .errors import (
    ConfigError,
    InstanceFormatError,
    OracleLimitError,
    SearchDeadlockError,
)
from .instance import (
    Instance,
    generate_random_instance,
    parse_instance,
    parse_taillard,
    read_instance,
    save_instance,
    write_instance,
)
from .makespan import backward_tail, evaluate_makespan, forward_completion
from .node import SearchNode
from .bound import one_machine_bound
from .generator import FlowshopGenerator, NodeGenerator, branch, root_node
from .heuristics import completion_lower_limit, exhaustive_search, neh_upper_bound

__all__ = [
    "Coordination",
    "Schedule",
    "ConfigError",
    "InstanceFormatError",
    "OracleLimitError",
    "SearchDeadlockError",
    "Instance",
    "generate_random_instance",
    "parse_instance",
    "parse_taillard",
    "read_instance",
    "save_instance",
    "write_instance",
    "backward_tail",
    "evaluate_makespan",
    "forward_completion",
    "SearchNode",
    "one_machine_bound",
    "FlowshopGenerator",
    "NodeGenerator",
    "branch",
    "root_node",
    "completion_lower_limit",
    "exhaustive_search",
    "neh_upper_bound",
]
