"""
One-Machine lower bound
"""

from typing import Sequence

from .instance import Instance
from .node import SearchNode


def bound_from_parts(
    inst: Instance,
    unscheduled: Sequence[int],
    front: Sequence[int],
    back: Sequence[int],
    remaining: Sequence[int],
) -> int:
    tails = inst.tail_sums
    best = 0
    for k in range(inst.num_machines):
        exit_time = back[k]
        if unscheduled:
            shortest = min(tails[j][k] for j in unscheduled)
            if shortest > exit_time:
                exit_time = shortest
        value = front[k] + remaining[k] + exit_time
        if value > best:
            best = value
    return best


def one_machine_bound(inst: Instance, node: SearchNode) -> int:
    """
    max over machines k of
        front[k] + work of U on k + max(min over U of tail_sums[j][k], back[k])

    With U empty this is max(front[k] + back[k]), the exact makespan.
    """
    return bound_from_parts(
        inst, node.unscheduled, node.front, node.back, node.remaining
    )
