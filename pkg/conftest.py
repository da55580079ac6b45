"""
Shared fixtures for the flowbnb test suites
"""

import os
import sys
from typing import List, Tuple

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from flowbnb.core import Instance, Schedule, exhaustive_search, generate_random_instance

BENCHMARKS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "benchmarks")


def oracle_suite(count: int, jobs: Tuple[int, int], machines: Tuple[int, int],
                 max_time: int = 20, seed: int = 1) -> List[Tuple[Instance, Schedule]]:
    """Seeded random instances paired with their exhaustive optimum"""
    rng = np.random.default_rng(seed)
    suite = []
    for _ in range(count):
        n = int(rng.integers(jobs[0], jobs[1], endpoint=True))
        m = int(rng.integers(machines[0], machines[1], endpoint=True))
        inst = generate_random_instance(n, m, max_time, int(rng.integers(0, 2**63)))
        suite.append((inst, exhaustive_search(inst)))
    return suite


@pytest.fixture
def one_by_one() -> Instance:
    return Instance.from_rows([[5]], name="one_by_one")


@pytest.fixture
def two_by_two() -> Instance:
    return Instance.from_rows([[1, 2], [2, 1]], name="two_by_two")


@pytest.fixture
def three_jobs() -> Instance:
    return Instance.from_rows([[3, 1], [1, 3], [2, 2]], name="three_jobs")


@pytest.fixture(scope="session")
def small_oracle() -> List[Tuple[Instance, Schedule]]:
    return oracle_suite(6, jobs=(5, 7), machines=(3, 5))


@pytest.fixture(scope="session")
def full_oracle() -> List[Tuple[Instance, Schedule]]:
    return oracle_suite(50, jobs=(5, 9), machines=(3, 6))


@pytest.fixture
def benchmarks_dir() -> str:
    return BENCHMARKS
