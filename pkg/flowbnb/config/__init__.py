"""
Configuration module for search skeletons
"""

from .config import (
    DEFAULT_BACKTRACK_BUDGET,
    DEFAULT_CUTOFF_DEPTH,
    SkeletonConfig,
)

__all__ = ["SkeletonConfig", "DEFAULT_BACKTRACK_BUDGET", "DEFAULT_CUTOFF_DEPTH"]
