"""Library settings and configuration"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from HILBERT_FORMS_* environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="HILBERT_FORMS_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    log_level: str = "WARNING"
    threads: Optional[int] = Field(default=None, ge=1)

    # Scalar numerics
    scalar_tol: float = Field(default=1e-10, gt=0)
    zeta_tol: float = Field(default=1e-12, gt=0)
    zeta_cutoff_cap: int = Field(default=1_000_000, ge=1)
    root_max_iter: int = Field(default=200, ge=1)

    # Quadrature
    quadrature_tol: float = Field(default=1e-10, gt=0)
    quadrature_max_refinements: int = Field(default=50, ge=1)

    # Spectral
    spectral_tol: float = Field(default=1e-8, gt=0)
    eigen_max_iter: int = Field(default=10_000, ge=1)
    dense_section_limit: int = Field(default=4096, ge=1)
    matrix_cap: int = Field(default=20_000, ge=1)

    # Majorant scan
    sup_m_max: int = Field(default=100_000, ge=2)

    # Verification
    verify_slack: float = Field(default=1e-12, ge=0)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
