"""
Makespan recurrences for permutation flowshops
"""

from typing import List, Sequence

from .instance import Instance
from .types import JobList, MachineTimes


def _check_jobs(inst: Instance, jobs: JobList) -> None:
    seen = set()
    for j in jobs:
        if not 0 <= j < inst.num_jobs:
            raise ValueError(f"job index {j} out of range [0, {inst.num_jobs})")
        if j in seen:
            raise ValueError(f"job {j} appears more than once")
        seen.add(j)


def append_job(rows: Sequence[Sequence[int]], front: Sequence[int], job: int) -> List[int]:
    """Completion times after running `job` behind a prefix finishing at `front`"""
    p = rows[job]
    out = list(front)
    t = out[0] + p[0]
    out[0] = t
    for k in range(1, len(out)):
        prev = out[k]
        t = (prev if prev > t else t) + p[k]
        out[k] = t
    return out


def prepend_job(rows: Sequence[Sequence[int]], back: Sequence[int], job: int) -> List[int]:
    """Tail times after running `job` ahead of a suffix with tails `back`"""
    p = rows[job]
    out = list(back)
    last = len(out) - 1
    t = out[last] + p[last]
    out[last] = t
    for k in range(last - 1, -1, -1):
        prev = out[k]
        t = (prev if prev > t else t) + p[k]
        out[k] = t
    return out


def forward_completion(inst: Instance, sigma1: JobList) -> MachineTimes:
    """
    Per-machine completion times of the prefix sigma1.

    An empty prefix completes at time 0 on every machine.
    """
    _check_jobs(inst, sigma1)
    front = [0] * inst.num_machines
    rows = inst.rows
    for j in sigma1:
        front = append_job(rows, front, j)
    return tuple(front)


def backward_tail(inst: Instance, sigma2_rev: JobList) -> MachineTimes:
    """
    Per-machine tail times of the suffix stored in reverse (sigma2_rev[0]
    executes last).

    b[k] is the shortest time from the moment machine k may start the first
    suffix job until the whole suffix leaves the last machine.
    """
    _check_jobs(inst, sigma2_rev)
    back = [0] * inst.num_machines
    rows = inst.rows
    for j in sigma2_rev:
        back = prepend_job(rows, back, j)
    return tuple(back)


def compose(front: Sequence[int], back: Sequence[int]) -> int:
    """Makespan of a prefix and a suffix placed back to back"""
    return max(f + b for f, b in zip(front, back))


def evaluate_makespan(inst: Instance, permutation: JobList) -> int:
    """Makespan C[n-1][m-1] of a complete permutation"""
    if len(permutation) != inst.num_jobs:
        raise ValueError(
            f"permutation has {len(permutation)} jobs, instance has {inst.num_jobs}"
        )
    _check_jobs(inst, permutation)
    front = [0] * inst.num_machines
    rows = inst.rows
    for j in permutation:
        front = append_job(rows, front, j)
    return front[-1]
