"""
Core configuration for the toolkit
"""
from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# app/core/config.py -> project root
project_root = Path(__file__).resolve().parent.parent.parent

env_file = project_root / ".env"
if env_file.exists():
    load_dotenv(env_file)


class SamplerSettings(BaseSettings):
    """Deterministic low-discrepancy sampling box"""

    box_low: float = Field(default=-2.0)
    box_high: float = Field(default=2.0)
    count: int = Field(default=256, gt=0)
    seed: int = Field(default=0, ge=0)

    model_config = SettingsConfigDict(env_prefix="HG_SAMPLER_", case_sensitive=False, extra="ignore")


class ToleranceSettings(BaseSettings):
    """Numerical tolerance tiers"""

    symbolic: float = Field(default=1e-12, gt=0)
    numeric: float = Field(default=1e-6, gt=0)
    nonstrategic: float = Field(default=1e-10, gt=0)
    potential: float = Field(default=1e-8, gt=0)
    closed: float = Field(default=1e-8, gt=0)
    label_symbolic: float = Field(default=1e-8, gt=0)
    label_grid: float = Field(default=1e-3, gt=0)
    norm_guard: float = Field(default=1e-30, gt=0)
    dedup: float = Field(default=1e-6, gt=0)
    nsd: float = Field(default=1e-8, gt=0)
    convergence: float = Field(default=1e-6, gt=0)

    model_config = SettingsConfigDict(env_prefix="HG_TOL_", case_sensitive=False, extra="ignore")


class GridSettings(BaseSettings):
    """Periodic-box lattice defaults"""

    resolution: int = Field(default=32, ge=8)
    max_points: int = Field(default=2**24, gt=0)
    scheme: Literal["spectral", "central2"] = Field(default="spectral")
    zero_mode_policy: Literal["to_potential", "to_vector"] = Field(default="to_potential")

    model_config = SettingsConfigDict(env_prefix="HG_GRID_", case_sensitive=False, extra="ignore")

    @field_validator("resolution")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value & (value - 1):
            raise ValueError("resolution must be a power of two")
        return value


class IntegratorSettings(BaseSettings):
    """Gradient-flow integrator defaults"""

    method: Literal["rk4", "rkf45"] = Field(default="rk4")
    step: float = Field(default=1e-3, gt=0)
    abs_tol: float = Field(default=1e-10, gt=0)
    rel_tol: float = Field(default=1e-8, gt=0)
    t_end: float = Field(default=50.0, gt=0)
    escape_radius: float = Field(default=1e3, gt=0)
    record_stride: int = Field(default=1, ge=1)
    max_steps: int = Field(default=5_000_000, gt=0)

    model_config = SettingsConfigDict(env_prefix="HG_INTEGRATOR_", case_sensitive=False, extra="ignore")


class RecurrenceSettings(BaseSettings):
    """Recurrence detection defaults"""

    epsilon: float = Field(default=1e-2, gt=0)
    t_min: float = Field(default=1.0, ge=0)

    model_config = SettingsConfigDict(env_prefix="HG_RECURRENCE_", case_sensitive=False, extra="ignore")


class NewtonSettings(BaseSettings):
    """Critical-point search defaults"""

    tol: float = Field(default=1e-12, gt=0)
    max_iter: int = Field(default=50, gt=0)
    fd_fallback: bool = Field(default=True)
    seeds: int = Field(default=64, gt=0)

    model_config = SettingsConfigDict(env_prefix="HG_NEWTON_", case_sensitive=False, extra="ignore")


class Settings(BaseSettings):
    """Toolkit settings"""

    app_name: str = Field(default="hodge-games")
    app_version: str = Field(default="0.1.0")

    # Logging
    log_level: str = Field(default="WARNING")
    log_format: Literal["json", "text"] = Field(default="text")
    log_file: Optional[str] = Field(default=None)

    # Fan-out width for independent runs (per gamma, per seed)
    max_workers: int = Field(default=1, ge=1)

    sampler: SamplerSettings = Field(default_factory=SamplerSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    grid: GridSettings = Field(default_factory=GridSettings)
    integrator: IntegratorSettings = Field(default_factory=IntegratorSettings)
    recurrence: RecurrenceSettings = Field(default_factory=RecurrenceSettings)
    newton: NewtonSettings = Field(default_factory=NewtonSettings)

    model_config = SettingsConfigDict(env_prefix="HG_", case_sensitive=False, extra="ignore")


# Global settings instance
settings = Settings()
