"""
Progress tracking and run metrics for long enumerations.
"""

import time
from typing import Dict, Optional

import psutil
from tqdm import tqdm

from config.settings import get_settings
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)


class ProgressTracker:
    """Helper class for tracking progress across enumerations; silent unless show_progress is set."""

    def __init__(self, desc: str = "Processing", total: int = 100, enabled: Optional[bool] = None):
        """
        Initialize progress tracker.

        Args:
            desc: Description for the progress bar
            total: Total number of items to process
            enabled: Force the bar on or off (settings default)
        """
        self.desc = desc
        self.total = total
        self.start_time = time.time()
        enabled = get_settings().show_progress if enabled is None else enabled
        self.pbar = tqdm(
            desc=desc,
            total=total,
            unit="items",
            disable=not enabled,
            bar_format="{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}]",
        )

    def update(self, n: int = 1, desc: Optional[str] = None):
        """Update progress bar."""
        if desc:
            self.pbar.set_description(desc)
        self.pbar.update(n)

    def close(self) -> float:
        """Close progress bar and return elapsed time."""
        elapsed = time.time() - self.start_time
        self.pbar.close()
        return elapsed


class MetricsCollector:
    """Collects wall time and memory snapshots for a single command run."""

    def __init__(self):
        """Initialize metrics collector."""
        self.reset()

    def reset(self):
        """Reset all metrics."""
        self.start_time = time.perf_counter()
        self.memory_snapshots: Dict[str, float] = {}

    def get_memory_usage(self) -> float:
        """Get current memory usage in MB."""
        try:
            process = psutil.Process()
            return process.memory_info().rss / 1024 / 1024
        except Exception:
            return 0.0

    def snapshot_memory(self, stage: str) -> float:
        """Take a memory snapshot at specific stage."""
        memory_mb = self.get_memory_usage()
        self.memory_snapshots[stage] = memory_mb
        return memory_mb

    def elapsed(self) -> float:
        return time.perf_counter() - self.start_time

    def get_summary(self) -> Dict:
        """Get a summary of all collected metrics."""
        return {"elapsed_s": self.elapsed(), "memory_snapshots": dict(self.memory_snapshots)}
