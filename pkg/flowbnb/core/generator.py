"""
Lazy node generators: the tree definition the search coordinations explore
"""

from abc import ABC, abstractmethod
from typing import Iterator

from .bound import bound_from_parts
from .instance import Instance
from .makespan import append_job, prepend_job
from .node import SearchNode
from .types import Schedule


class NodeGenerator(ABC):
    """
    Abstract base class for lazy node generators.
    A generator defines the root, produces a node's children on demand in
    heuristic order, and reports bounds and objectives. Coordinations only
    talk to this interface.
    """

    @abstractmethod
    def root(self) -> SearchNode:
        """Root of the search tree"""
        pass

    @abstractmethod
    def children(self, node: SearchNode) -> Iterator[SearchNode]:
        """Children of node, produced lazily in heuristic order"""
        pass

    def bound(self, node: SearchNode) -> int:
        return node.lower_bound

    def is_complete(self, node: SearchNode) -> bool:
        return node.is_complete

    def objective(self, node: SearchNode) -> Schedule:
        """Schedule of a complete node"""
        return Schedule(permutation=node.schedule(), makespan=node.makespan())


def root_node(inst: Instance) -> SearchNode:
    """Empty schedule with every job unscheduled"""
    zeros = (0,) * inst.num_machines
    unscheduled = tuple(range(inst.num_jobs))
    remaining = inst.machine_work
    return SearchNode(
        sigma1=(),
        sigma2_rev=(),
        unscheduled=unscheduled,
        depth=0,
        front=zeros,
        back=zeros,
        remaining=remaining,
        lower_bound=bound_from_parts(inst, unscheduled, zeros, zeros, remaining),
    )


def branch(inst: Instance, node: SearchNode) -> Iterator[SearchNode]:
    """
    Alternate-rule branching.

    One child per unscheduled job in ascending index order. The root has
    depth 0; a child at odd depth appends its job to sigma1, a child at even
    depth places it at the front of the remaining sigma2 block.
    """
    if not node.unscheduled:
        raise ValueError(f"cannot branch a complete node: {node}")
    return _children(inst, node)


def _children(inst: Instance, node: SearchNode) -> Iterator[SearchNode]:
    rows = inst.rows
    depth = node.depth + 1
    into_sigma1 = depth % 2 == 1
    unscheduled = node.unscheduled
    remaining = node.remaining
    machines = range(inst.num_machines)

    for index, job in enumerate(unscheduled):
        p = rows[job]
        rest = unscheduled[:index] + unscheduled[index + 1 :]
        left = tuple(remaining[k] - p[k] for k in machines)
        if into_sigma1:
            sigma1, sigma2_rev = node.sigma1 + (job,), node.sigma2_rev
            front, back = tuple(append_job(rows, node.front, job)), node.back
        else:
            sigma1, sigma2_rev = node.sigma1, node.sigma2_rev + (job,)
            front, back = node.front, tuple(prepend_job(rows, node.back, job))
        yield SearchNode(
            sigma1=sigma1,
            sigma2_rev=sigma2_rev,
            unscheduled=rest,
            depth=depth,
            front=front,
            back=back,
            remaining=left,
            lower_bound=bound_from_parts(inst, rest, front, back, left),
        )


class FlowshopGenerator(NodeGenerator):
    """Two-sided flowshop tree with the Alternate rule and the One-Machine bound"""

    def __init__(self, inst: Instance):
        self.inst = inst

    def root(self) -> SearchNode:
        return root_node(self.inst)

    def children(self, node: SearchNode) -> Iterator[SearchNode]:
        return branch(self.inst, node)

    def __str__(self) -> str:
        return f"FlowshopGenerator({self.inst.name})"
