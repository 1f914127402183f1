import logging

import psutil

from arith.errors import DomainError
from config import config

logger = logging.getLogger(__name__)


class MemoryBudgetError(DomainError):
    """A sieve that would not fit the configured memory budget."""


def estimate_sieve_memory_gb(limit: int, bytes_per_entry: int = 8) -> float:
    """Estimate resident memory of a sieve with limit + 1 entries."""
    table_gb = (limit + 1) * bytes_per_entry / (1024**3)
    # Add modest overhead for temporaries created while sieving (~15%)
    return table_gb * 1.15


def get_available_memory_gb() -> float:
    return psutil.virtual_memory().available / (1024**3)


def get_process_memory_mb() -> float:
    return psutil.Process().memory_info().rss / (1024**2)


def check_sieve_budget(limit: int, bytes_per_entry: int = 8) -> float:
    """Raise MemoryBudgetError unless a sieve up to limit fits; returns the estimate in GB."""
    if limit > config.sieve_ceiling:
        raise MemoryBudgetError(f"limit {limit} exceeds the sieve ceiling {config.sieve_ceiling}")

    needed_gb = estimate_sieve_memory_gb(limit, bytes_per_entry)
    available_gb = get_available_memory_gb() * config.memory_fraction
    if needed_gb > available_gb:
        raise MemoryBudgetError(
            f"sieve up to {limit} needs about {needed_gb:.1f}GB, only {available_gb:.1f}GB available"
        )
    return needed_gb


def log_memory_usage(label: str) -> None:
    logger.info("🖥️ %s: process RSS %.1fMB", label, get_process_memory_mb())
