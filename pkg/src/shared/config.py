"""Configuration settings for the lattice-covers tools."""
from typing import Optional
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings (environment prefix ``LATTICE_COVERS_``)."""

    # Logging settings
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    enable_detailed_logging: bool = False
    log_file: Optional[str] = "lattice_covers.log"

    # Oracle settings
    oracle_default_bound: int = 10
    oracle_max_box_points: int = 2_000_000

    # Decision report settings
    report_max_degree: int = 12

    # Input settings
    max_payload_size_mb: float = 5.0

    # Server settings
    server_name: str = "Lattice-Covers"
    server_version: str = "0.1.0"

    class Config:
        env_file = ".env"
        env_prefix = "LATTICE_COVERS_"
        case_sensitive = False


# Singleton instance
settings = Settings()
