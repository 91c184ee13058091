from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Worker pool for independent verification cases
    threads: int = 4

    # Truncation
    default_order: int = 6
    max_order: int = 12  # guard for symbolic blow-up; raise explicitly to go further

    # Theta-matrix sizes
    matrix_dim: int = 22
    matrix_dense_dim: int = 64

    # Numeric tolerances
    oracle_tol: float = 1e-12
    function_tol: float = 1e-10
    composed_tol: float = 1e-9

    # Application
    log_level: str = "INFO"
    app_version: str = "0.1.0"

    model_config = SettingsConfigDict(env_prefix="FORGE_", env_file=".env")


@lru_cache
def get_settings() -> Settings:
    return Settings()
