"""
Configuration settings for falsilab.
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Base paths
BASE_DIR = Path(__file__).parent.parent
CONFIG_DIR = BASE_DIR / "config"

APP_TITLE = "falsilab"
APP_DESCRIPTION = "Exact falsifiability measures over finite hypothesis classes"
APP_VERSION = "1.0.0"


class Settings(BaseSettings):
    """Runtime settings, overridable through FALSILAB_* environment variables or a .env file."""

    model_config = SettingsConfigDict(env_prefix="FALSILAB_", env_file=".env", extra="ignore")

    # Largest ground size a family may be materialized on (2^cap traces)
    cap: int = Field(24, ge=1, le=64)
    # Traces are stored as uint64
    max_ground: int = Field(64, ge=1, le=64)
    # Partial assignments enumerated by a Popper profile
    profile_budget: int = Field(200_000, ge=1)
    grid_step: float = Field(1e-4, gt=0, lt=1)

    # Logging settings
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    show_progress: bool = False


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
