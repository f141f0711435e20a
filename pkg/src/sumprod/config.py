from pydantic_settings import BaseSettings


class Config(BaseSettings):
    """Tool configuration loaded from environment variables."""

    cap: int = 10000  # Group elements examined by a positivity search before giving up
    debug: bool = False
    oracle_workers: int = 1  # Processes for the bounded-height search; 1 runs it in-process

    model_config = {
        "env_file": [".env"],
        "env_prefix": "SUMPROD_",
        "extra": "ignore",
    }
