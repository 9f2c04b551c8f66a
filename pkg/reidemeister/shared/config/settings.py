"""
Settings Configuration for the Reidemeister toolkit
Centralized configuration management using Pydantic Settings
"""

from typing import Optional
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Toolkit settings with environment variable support"""

    # Logging Configuration
    log_level: str = Field("WARNING", alias="REIDEMEISTER_LOG_LEVEL")
    log_format: str = Field("console", alias="REIDEMEISTER_LOG_FORMAT")

    # Dual module: optional override of the prime used for central characters
    dual_prime: Optional[int] = Field(None, alias="REIDEMEISTER_DUAL_PRIME")
    prime_search_limit: int = Field(1_000_000, alias="REIDEMEISTER_PRIME_SEARCH_LIMIT")
    splitting_rounds: int = Field(3, alias="REIDEMEISTER_SPLITTING_ROUNDS")

    # Size caps
    closure_cap: int = Field(20000, alias="REIDEMEISTER_CLOSURE_CAP")
    semidirect_cap: int = Field(20000, alias="REIDEMEISTER_SEMIDIRECT_CAP")
    automorphism_cap: int = Field(256, alias="REIDEMEISTER_AUTOMORPHISM_CAP")
    dual_cap: int = Field(256, alias="REIDEMEISTER_DUAL_CAP")
    associativity_exhaustive_limit: int = Field(512, alias="REIDEMEISTER_ASSOCIATIVITY_EXHAUSTIVE_LIMIT")
    finite_verification_cap: int = Field(1024, alias="REIDEMEISTER_FINITE_VERIFICATION_CAP")
    sequence_cap: int = Field(64, alias="REIDEMEISTER_SEQUENCE_CAP")

    # Power series truncation
    default_truncation: int = Field(30, alias="REIDEMEISTER_DEFAULT_TRUNCATION")
    max_truncation: int = Field(128, alias="REIDEMEISTER_MAX_TRUNCATION")

    # Sweep execution
    sweep_workers: int = Field(1, alias="REIDEMEISTER_SWEEP_WORKERS")

    @field_validator('log_level', mode='before')
    @classmethod
    def normalize_log_level(cls, v):
        """Accept lower-case level names from the environment"""
        return str(v).upper()

    @field_validator('log_format')
    @classmethod
    def check_log_format(cls, v):
        if v not in ("console", "json"):
            raise ValueError("log format must be 'console' or 'json'")
        return v

    model_config = {
        "env_file": ".env",
        "case_sensitive": False,
        "populate_by_name": True,
        "extra": "ignore",
    }


# Create settings instance
settings = Settings()
