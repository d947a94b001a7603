"""
Configuration for bsroots.
Environment defaults come from a .env file (python-dotenv); run-time options
are validated pydantic models.
"""

import os
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

# Load environment variables from .env file
load_dotenv()

CACHE_ENV_VAR = "BSROOTS_CACHE"
JOBS_ENV_VAR = "BSROOTS_JOBS"
LOG_LEVEL_ENV_VAR = "BSROOTS_LOG_LEVEL"


def default_cache_path() -> Optional[str]:
    """Cache file named by BSROOTS_CACHE, or None when unset/empty."""
    return os.environ.get(CACHE_ENV_VAR, "") or None


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV_VAR, "1")))
    except ValueError:
        return 1


def default_log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV_VAR, "WARNING").upper()


class PipelineConfig(BaseModel):
    """Options for the characteristic-p root pipeline (bs_pipeline.bs_roots)."""

    model_config = ConfigDict(frozen=True)

    levels: Optional[int] = Field(default=None, ge=1)
    min_levels: int = Field(default=16, ge=1)
    target_modulus: int = Field(default=10**6, ge=2)
    max_preperiod: int = Field(default=8, ge=0)
    max_period: int = Field(default=12, ge=1)
    certify: bool = True
    samples: int = Field(default=3, ge=2)
    max_d: int = Field(default=20, ge=1)
    q_min: int = Field(default=50, ge=1)
    grid_scale: int = Field(default=1, ge=1)
    method: Literal["grid", "chain", "both"] = "grid"
    cross_check: bool = True
    cross_check_steps: int = Field(default=60, ge=1)
    extend_levels: bool = True
    chain_budget: int = Field(default=10**5, ge=1)
    jobs: int = Field(default_factory=default_jobs, ge=1)
    progress: bool = False


class Char0Config(BaseModel):
    """Options for the characteristic-zero root recovery (char_zero.char0_roots)."""

    model_config = ConfigDict(frozen=True)

    grid_scale: int = Field(default=1, ge=1)
    m_max: int = Field(default=60, ge=1)
    q_min: int = Field(default=50, ge=1)
    samples: int = Field(default=5, ge=5)
    audit_samples: int = Field(default=3, ge=0)
    enlarged_check: bool = True
    jobs: int = Field(default_factory=default_jobs, ge=1)
    progress: bool = False
