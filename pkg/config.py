from pathlib import Path
from typing import Literal, Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="OPN_")

    # Searches
    shards: int = 1
    sieve_ceiling: int = 1_000_000_000
    memory_fraction: float = 0.9
    progress: bool = False

    # Output
    output_format: Literal["human", "json"] = "human"
    log_level: str = "WARNING"

    # Run history
    results_db: Optional[Path] = None
    record_results: bool = False


config = Config()
