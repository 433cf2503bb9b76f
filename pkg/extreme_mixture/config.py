"""
Runtime configuration read from the environment (and an optional .env file).
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    policy_cap: int = Field(default=4096, ge=1)
    oracle_max_points: int = Field(default=10, ge=1)
    oracle_max_atoms: int = Field(default=15, ge=1)
    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings once per process; values come from EXTREME_MIXTURE_* variables."""
    load_dotenv()
    return Settings(
        policy_cap=int(os.getenv("EXTREME_MIXTURE_POLICY_CAP", "4096")),
        oracle_max_points=int(os.getenv("EXTREME_MIXTURE_ORACLE_MAX_POINTS", "10")),
        oracle_max_atoms=int(os.getenv("EXTREME_MIXTURE_ORACLE_MAX_ATOMS", "15")),
        log_level=os.getenv("EXTREME_MIXTURE_LOG_LEVEL", "WARNING").upper(),
    )
