"""
Tests for SkeletonConfig
"""

import os

import pytest

from flowbnb.config import DEFAULT_BACKTRACK_BUDGET, DEFAULT_CUTOFF_DEPTH, SkeletonConfig
from flowbnb.core import ConfigError, Coordination


def test_defaults_per_coordination():
    assert SkeletonConfig.for_coordination("depthbounded").cutoff_depth == DEFAULT_CUTOFF_DEPTH == 5
    assert SkeletonConfig.for_coordination("budget").backtrack_budget == DEFAULT_BACKTRACK_BUDGET == 50000
    config = SkeletonConfig.for_coordination("stackstealing", workers=4)
    assert config.cutoff_depth is None and config.backtrack_budget is None
    assert config.workers == 4


def test_single_worker_coordinations_force_one_worker():
    assert SkeletonConfig(coordination="seq", workers=8).workers == 1
    assert SkeletonConfig(coordination=Coordination.DIRECT, workers=8).workers == 1


def test_coordination_aliases():
    assert Coordination.parse("sequential") is Coordination.SEQUENTIAL
    assert Coordination.parse("STACK_STEALING") is Coordination.STACK_STEALING
    with pytest.raises(ValueError, match="Unknown coordination"):
        Coordination.parse("breadthfirst")


@pytest.mark.parametrize(
    "kwargs, fragment",
    [
        ({"coordination": "budget", "workers": 0, "backtrack_budget": 10}, "workers"),
        ({"coordination": "depthbounded"}, "needs a cutoff_depth"),
        ({"coordination": "budget"}, "needs a backtrack_budget"),
        ({"coordination": "budget", "backtrack_budget": 10, "cutoff_depth": 2}, "cutoff_depth only"),
        ({"coordination": "stackstealing", "backtrack_budget": 10}, "backtrack_budget only"),
        ({"coordination": "budget", "backtrack_budget": 0}, "positive"),
        ({"coordination": "depthbounded", "cutoff_depth": -1}, "non-negative"),
        ({"coordination": "seq", "rng_seed": 2**64}, "rng_seed"),
        ({"coordination": "seq", "time_limit": 0}, "time_limit"),
        ({"coordination": "seq", "watchdog_interval": -1.0}, "watchdog_interval"),
    ],
)
def test_validate_rejects(kwargs, fragment):
    with pytest.raises(ConfigError, match=fragment):
        SkeletonConfig(**kwargs).validate()


def test_yaml_round_trip(tmp_path):
    config = SkeletonConfig.for_coordination("budget", workers=6, backtrack_budget=1000, rng_seed=3)
    path = str(tmp_path / "solver.yaml")
    config.to_yaml(path)
    loaded = SkeletonConfig.from_yaml(path)
    assert loaded == config
    assert loaded.parameter() == 1000


def test_from_yaml_fills_defaults(tmp_path):
    path = tmp_path / "solver.yaml"
    path.write_text("coordination: depthbounded\nworkers: 2\n")
    config = SkeletonConfig.from_yaml(str(path))
    assert config.coordination is Coordination.DEPTH_BOUNDED
    assert config.cutoff_depth == 5
    config.validate()


def test_from_yaml_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        SkeletonConfig.from_yaml(str(tmp_path / "absent.yaml"))
    bad = tmp_path / "bad.yaml"
    bad.write_text("coordination: budget\nthreads: 4\n")
    with pytest.raises(ConfigError, match="threads"):
        SkeletonConfig.from_yaml(str(bad))
    listing = tmp_path / "list.yaml"
    listing.write_text("- budget\n")
    with pytest.raises(ConfigError, match="mapping"):
        SkeletonConfig.from_yaml(str(listing))


def test_bundled_solver_config(benchmarks_dir):
    config = SkeletonConfig.from_yaml(os.path.join(benchmarks_dir, "solver.yaml"))
    config.validate()
    assert config.coordination is Coordination.BUDGET
    assert config.backtrack_budget == 50000


def test_str_names_parameter():
    text = str(SkeletonConfig.for_coordination("depthbounded", workers=2, cutoff_depth=3))
    assert text == "depthbounded(workers=2, cutoff_depth=3, seed=0)"
