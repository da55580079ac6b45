"""
Configuration management for search skeletons
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

import yaml

from ..core.errors import ConfigError
from ..core.types import Coordination

DEFAULT_CUTOFF_DEPTH = 5
DEFAULT_BACKTRACK_BUDGET = 50_000
DEFAULT_WATCHDOG_INTERVAL = 60.0


@dataclass
class SkeletonConfig:
    """
    Configuration for one search run: the coordination and its parameters
    """

    coordination: Coordination = Coordination.SEQUENTIAL
    workers: int = 1
    cutoff_depth: Optional[int] = None
    backtrack_budget: Optional[int] = None
    rng_seed: int = 0
    time_limit: Optional[float] = None
    share_incumbent: bool = True
    watchdog_interval: float = DEFAULT_WATCHDOG_INTERVAL
    trace_path: Optional[str] = None

    def __post_init__(self):
        self.coordination = Coordination.parse(self.coordination)
        if self.coordination.is_single_worker:
            self.workers = 1

    @classmethod
    def for_coordination(cls, coordination: Any, **overrides: Any) -> "SkeletonConfig":
        """Config with the coordination's default parameter filled in"""
        coordination = Coordination.parse(coordination)
        params: Dict[str, Any] = {}
        if coordination is Coordination.DEPTH_BOUNDED:
            params["cutoff_depth"] = DEFAULT_CUTOFF_DEPTH
        elif coordination is Coordination.BUDGET:
            params["backtrack_budget"] = DEFAULT_BACKTRACK_BUDGET
        params.update({k: v for k, v in overrides.items() if v is not None})
        return cls(coordination=coordination, **params)

    @staticmethod
    def read_yaml(yaml_path: str) -> Dict[str, Any]:
        """Raw key/value pairs of a YAML config file"""
        if not os.path.exists(yaml_path):
            raise FileNotFoundError(f"Configuration file not found: {yaml_path}")

        with open(yaml_path, "r") as f:
            config_data = yaml.safe_load(f) or {}

        if not isinstance(config_data, dict):
            raise ConfigError(f"{yaml_path}: expected a mapping at top level")
        return config_data

    @classmethod
    def from_yaml(cls, yaml_path: str) -> "SkeletonConfig":
        """Load configuration from YAML file"""
        return cls.from_dict(cls.read_yaml(yaml_path))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SkeletonConfig":
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown configuration keys: {', '.join(unknown)}")
        if "coordination" not in data:
            return cls(**data)
        params = dict(data)
        return cls.for_coordination(params.pop("coordination"), **params)

    def to_yaml(self, yaml_path: str) -> None:
        """Save configuration to YAML file"""
        with open(yaml_path, "w") as f:
            yaml.safe_dump(self.to_dict(), f, default_flow_style=False)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {
            "coordination": self.coordination.value,
            "workers": self.workers,
            "cutoff_depth": self.cutoff_depth,
            "backtrack_budget": self.backtrack_budget,
            "rng_seed": self.rng_seed,
            "time_limit": self.time_limit,
            "share_incumbent": self.share_incumbent,
            "watchdog_interval": self.watchdog_interval,
            "trace_path": self.trace_path,
        }

    def validate(self) -> None:
        """Validate configuration"""
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")

        is_depth_bounded = self.coordination is Coordination.DEPTH_BOUNDED
        if is_depth_bounded and self.cutoff_depth is None:
            raise ConfigError("DepthBounded search needs a cutoff_depth")
        if not is_depth_bounded and self.cutoff_depth is not None:
            raise ConfigError(
                f"cutoff_depth only applies to DepthBounded, not {self.coordination.value}"
            )
        if self.cutoff_depth is not None and self.cutoff_depth < 0:
            raise ConfigError(f"cutoff_depth must be non-negative, got {self.cutoff_depth}")

        is_budget = self.coordination is Coordination.BUDGET
        if is_budget and self.backtrack_budget is None:
            raise ConfigError("Budget search needs a backtrack_budget")
        if not is_budget and self.backtrack_budget is not None:
            raise ConfigError(
                f"backtrack_budget only applies to Budget, not {self.coordination.value}"
            )
        if self.backtrack_budget is not None and self.backtrack_budget < 1:
            raise ConfigError(
                f"backtrack_budget must be positive, got {self.backtrack_budget}"
            )

        if not 0 <= self.rng_seed < 2**64:
            raise ConfigError(f"rng_seed must be a 64-bit unsigned integer, got {self.rng_seed}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ConfigError(f"time_limit must be positive, got {self.time_limit}")
        if self.watchdog_interval <= 0:
            raise ConfigError(
                f"watchdog_interval must be positive, got {self.watchdog_interval}"
            )

    def parameter(self) -> Optional[int]:
        """The coordination's tuning parameter, if it has one"""
        if self.coordination is Coordination.DEPTH_BOUNDED:
            return self.cutoff_depth
        if self.coordination is Coordination.BUDGET:
            return self.backtrack_budget
        return None

    def __str__(self) -> str:
        text = f"{self.coordination.value}(workers={self.workers}"
        if self.cutoff_depth is not None:
            text += f", cutoff_depth={self.cutoff_depth}"
        if self.backtrack_budget is not None:
            text += f", backtrack_budget={self.backtrack_budget}"
        return text + f", seed={self.rng_seed})"
