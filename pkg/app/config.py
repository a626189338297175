from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    app_name: str = "QK Cominúsculo"
    app_version: str = "1.0.0"
    debug: bool = False
    log_level: str = "WARNING"
    max_dim: int = Field(default=30, ge=1)
    jobs: int = Field(default=1, ge=1)
    lemma_sample_size: int = Field(default=1000, ge=1)
    exhaustive_chain_limit: int = Field(default=200000, ge=0)
    random_seed: int = 0

    model_config = SettingsConfigDict(
        env_prefix="QKC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    return Settings()
