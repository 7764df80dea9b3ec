"""
Configuration for the lifted CTL checker
Settings come from the environment (LIFTED_CTL_*) or a local .env file
"""

from pathlib import Path
from functools import lru_cache
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables
load_dotenv()

# Bundled models
DATA_DIR = Path(__file__).resolve().parent.parent / "bench" / "data"
VENDING_MODEL_PATH = DATA_DIR / "vending.fts"


class Settings(BaseSettings):
    """Runtime settings. They only affect logging and defaults, never verdicts."""

    model_config = SettingsConfigDict(env_prefix="LIFTED_CTL_", extra="ignore")

    log_level: str = "WARNING"
    log_format: Literal["json", "text"] = "json"
    log_dir: Optional[Path] = None

    # Engine defaults
    reuse: bool = True

    # Random model generator caps (desk scale)
    max_random_states: int = Field(default=8, ge=1)
    max_random_features: int = Field(default=5, ge=1)

    # Benchmarks
    bench_repeat: int = Field(default=1, ge=1)

    # DOT export
    dot_rankdir: Literal["TB", "LR"] = "TB"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance"""
    return Settings()


_settings = get_settings()

# Generator caps
MAX_RANDOM_STATES = _settings.max_random_states
MAX_RANDOM_FEATURES = _settings.max_random_features

# Refinement
DEFAULT_REUSE = _settings.reuse

# Benchmark configuration
BENCH_REPEAT = _settings.bench_repeat

# Exit codes
EXIT_ALL_SATISFIED = 0
EXIT_VIOLATED = 1
EXIT_USAGE_ERROR = 2
EXIT_INTERNAL_ERROR = 3
