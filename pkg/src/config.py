"""Configuration settings for cantor-retract."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Logging
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, alias="LOG_FILE")

    # Verification defaults
    default_seed: int = Field(default=20240101, alias="CANTOR_SEED")
    default_enum_cap: int = Field(default=200000, alias="CANTOR_ENUM_CAP", gt=0)
    # verify_witness depth defaults to the cover depth plus this margin
    depth_margin: int = Field(default=2, alias="CANTOR_DEPTH_MARGIN", ge=0)
    max_shrink_rounds: int = Field(default=64, alias="CANTOR_MAX_SHRINK_ROUNDS", ge=0)

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }


# Global settings instance
settings = Settings()
