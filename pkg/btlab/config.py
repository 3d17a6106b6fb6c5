"""
Configuration for the workbench
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class WorkbenchConfig(BaseSettings):
    """Defaults for every subcommand, overridable through BTLAB_* variables or a .env file"""
    model_config = SettingsConfigDict(
        env_prefix='BTLAB_',
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore',
    )

    log_level: str = Field(
        default='INFO',
        description='Logging level for the diagnostic stream'
    )
    threads: int = Field(
        default=4,
        ge=1,
        description='Worker threads for segment sieving'
    )
    seed: int = Field(
        default=20240607,
        description='Seed for randomized sweeps when --seed is not given'
    )
    pair_depth: int = Field(
        default=16,
        ge=0,
        description='Word length cap for exponent-pair searches'
    )
    sieve_step: float = Field(
        default=0.001,
        gt=0,
        le=0.01,
        description='Grid step for the linear-sieve functions'
    )
    sieve_s_max: float = Field(
        default=10.0,
        ge=2,
        description='Upper end of the sieve-function table'
    )
    segment_odds: int = Field(
        default=1 << 20,
        ge=1024,
        description='Odd numbers per prime-sieve segment'
    )
    smooth_eta: float = Field(
        default=0.25,
        gt=0,
        lt=1,
        description='Smoothness exponent for generated smooth squarefree moduli'
    )


def load_config() -> WorkbenchConfig:
    """Load configuration from environment variables and .env file"""
    return WorkbenchConfig()
