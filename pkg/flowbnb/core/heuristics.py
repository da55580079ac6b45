"""
Upper bounds and exact oracles: NEH and exhaustive enumeration
"""

import itertools
from typing import Optional, Sequence

import numpy as np

from .errors import OracleLimitError
from .instance import Instance
from .makespan import append_job, evaluate_makespan
from .node import SearchNode
from .types import Schedule

EXHAUSTIVE_LIMIT = 10


def _prefix_makespan(rows, jobs: Sequence[int], machines: int) -> int:
    front = [0] * machines
    for j in jobs:
        front = append_job(rows, front, j)
    return front[-1]


def neh_upper_bound(inst: Instance) -> Schedule:
    """
    NEH constructive heuristic.

    Jobs are taken by decreasing total processing time (ties: lower index
    first) and each is inserted at the position minimising the partial
    makespan (ties: earliest position).
    """
    totals = np.asarray(inst.total_work, dtype=np.int64)
    order = [int(j) for j in np.argsort(-totals, kind="stable")]
    rows = inst.rows
    m = inst.num_machines

    sequence = [order[0]]
    for job in order[1:]:
        best_pos, best_value = 0, None
        for pos in range(len(sequence) + 1):
            candidate = sequence[:pos] + [job] + sequence[pos:]
            value = _prefix_makespan(rows, candidate, m)
            if best_value is None or value < best_value:
                best_pos, best_value = pos, value
        sequence.insert(best_pos, job)

    return Schedule(permutation=tuple(sequence), makespan=evaluate_makespan(inst, sequence))


def _batch_makespans(
    proc: np.ndarray,
    perms: np.ndarray,
    front: Optional[Sequence[int]] = None,
    back: Optional[Sequence[int]] = None,
) -> np.ndarray:
    """Makespans of many job blocks at once; perms has one block per row"""
    count = perms.shape[0]
    machines = proc.shape[1]
    if front is None:
        completion = np.zeros((count, machines), dtype=np.int64)
    else:
        completion = np.tile(np.asarray(front, dtype=np.int64), (count, 1))
    for pos in range(perms.shape[1]):
        p = proc[perms[:, pos]]
        completion[:, 0] += p[:, 0]
        for k in range(1, machines):
            completion[:, k] = np.maximum(completion[:, k], completion[:, k - 1]) + p[:, k]
    if back is None:
        return completion[:, -1]
    return (completion + np.asarray(back, dtype=np.int64)).max(axis=1)


def _permutation_block(jobs: Sequence[int]) -> np.ndarray:
    width = len(jobs)
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.permutations(jobs)), dtype=np.int64).reshape(-1, width)


def exhaustive_search(inst: Instance) -> Schedule:
    """
    Evaluate all n! permutations and return the lexicographically smallest
    one with minimal makespan. Refuses instances with more than 10 jobs.
    """
    n = inst.num_jobs
    if n > EXHAUSTIVE_LIMIT:
        raise OracleLimitError(
            f"exhaustive search is limited to {EXHAUSTIVE_LIMIT} jobs, instance has {n}"
        )

    best_value, best_perm = None, None
    # one chunk per leading job keeps memory at (n-1)! rows and preserves
    # lexicographic order across chunks
    for first in range(n):
        rest = [j for j in range(n) if j != first]
        block = _permutation_block(rest)
        perms = np.hstack([np.full((block.shape[0], 1), first, dtype=np.int64), block])
        values = _batch_makespans(inst.proc_time, perms)
        index = int(np.argmin(values))
        if best_value is None or values[index] < best_value:
            best_value = int(values[index])
            best_perm = tuple(int(j) for j in perms[index])

    return Schedule(permutation=best_perm, makespan=best_value)


def completion_lower_limit(inst: Instance, node: SearchNode) -> int:
    """Minimum makespan over every completion of a partial schedule, by enumeration"""
    if node.is_complete:
        return node.makespan()
    if len(node.unscheduled) > EXHAUSTIVE_LIMIT:
        raise OracleLimitError(
            f"cannot enumerate completions of {len(node.unscheduled)} unscheduled jobs"
        )
    perms = _permutation_block(node.unscheduled)
    values = _batch_makespans(inst.proc_time, perms, front=node.front, back=node.back)
    return int(values.min())
