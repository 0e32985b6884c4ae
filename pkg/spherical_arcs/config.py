"""
Spherical Arcs - Configuration Module
Loads and validates runtime settings using Pydantic Settings.
"""
import logging
import sys
from functools import lru_cache
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime configuration loaded from environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SPHERICAL_ARCS_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Settings
    environment: str = "development"
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    # Homological Checks
    homological_bound_padding_periods: int = 2  # L = span + padding * (|w|+1)

    # Periodic Diagrams
    periodic_context_periods: int = 2  # extra periods materialized on each side
    max_period_length_factor: int = 8  # arcs must be shorter than factor * period

    # Search Budgets
    enumeration_cap: int = 250_000  # DFS nodes visited before giving up
    graph_max_nodes: int = 5_000

    # Rendering
    render_unit: int = 24  # pixels per vertex
    render_max_vertices: int = 10_000
    render_hashsalt: str = "spherical-arcs"

    # Fountain Heuristic
    fountain_default_depths: list[int] = [1, 2, 4, 8]
    fountain_min_depths: int = 3

    # Acceptance Sweeps
    sweep_max_span_periods: int = 3  # spans up to this many multiples of |w|+1
    sweep_weights: list[int] = [-1, -2, -3, -4]


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def configure_logging(level: Optional[str] = None) -> None:
    """Configure the root logger once for command-line use. Logs go to stderr."""
    settings = get_settings()
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=settings.log_format,
        stream=sys.stderr,
        force=True,
    )
