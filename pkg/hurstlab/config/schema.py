"""Pydantic configuration models for hurstlab.

All config is loaded from ~/.hurstlab/config.json and can be overridden
via HURSTLAB_ prefixed environment variables (HURSTLAB_THREADS caps the
worker pool, HURSTLAB_ROLLING__SHIFT overrides the window shift, ...).
"""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic_settings.main import JsonConfigSettingsSource

# Windows from ~32 trading days down to ~1 trading day of 1-minute bars.
DEFAULT_WINDOWS: tuple[int, ...] = (512, 1024, 2048, 4096, 8192, 16384)
MIN_WINDOW = 512


class DfaDefaults(BaseModel):
    """Detrending degree and optional τ grid bounds for every DFA fit."""

    degree: int = Field(default=2, ge=0, le=8, description="Polynomial degree p of DFA-p.")
    tau_min: int | None = Field(
        default=None,
        ge=2,
        description="Smallest box size. None = max(8, p+2).",
    )
    tau_max: int | None = Field(
        default=None,
        ge=3,
        description="Largest box size. None = floor(N/4) of each window.",
    )


class RollingDefaults(BaseModel):
    """Backward-window geometry for local Hurst series."""

    windows: list[int] = Field(
        default_factory=lambda: list(DEFAULT_WINDOWS),
        description="Window lengths L in samples.",
    )
    shift: int = Field(default=10, ge=1, description="Shift Δt between window ends, in samples.")

    @field_validator("windows")
    @classmethod
    def _check_windows(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one window is required")
        too_small = [w for w in value if w < MIN_WINDOW]
        if too_small:
            raise ValueError(f"windows below {MIN_WINDOW} samples: {too_small}")
        return sorted(set(value))


class IngestConfig(BaseModel):
    """Validation policy for timestamp,price CSV input."""

    max_reject_fraction: float = Field(
        default=0.01,
        ge=0.0,
        le=1.0,
        description="Hard error when more than this fraction of rows is rejected.",
    )
    session_offset_minutes: int = Field(
        default=0,
        ge=-1440,
        le=1440,
        description="Shift of the day boundary used for end-of-day flags.",
    )


class HistogramConfig(BaseModel):
    bin_width: float = Field(default=0.02, gt=0.0, le=0.5)


class ResampleDefaults(BaseModel):
    repeats: int = Field(default=5, ge=1, le=1000)


class HurstLabConfig(BaseSettings):
    """Root configuration for hurstlab.

    Loaded from ~/.hurstlab/config.json with HURSTLAB_ env var overrides.
    """

    model_config = SettingsConfigDict(
        env_prefix="HURSTLAB_",
        env_nested_delimiter="__",
        json_file=Path("~/.hurstlab/config.json").expanduser(),
        json_file_encoding="utf-8",
        extra="ignore",
    )

    threads: int = Field(default=0, ge=0, description="Worker cap. 0 = one per CPU.")
    seed: int = Field(default=0, ge=0, lt=2**64)
    log_dir: Path | None = None
    dfa: DfaDefaults = Field(default_factory=DfaDefaults)
    rolling: RollingDefaults = Field(default_factory=RollingDefaults)
    ingest: IngestConfig = Field(default_factory=IngestConfig)
    histogram: HistogramConfig = Field(default_factory=HistogramConfig)
    resample: ResampleDefaults = Field(default_factory=ResampleDefaults)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        """Env vars win over init kwargs (a loaded config file), which win over the JSON default."""
        return (
            env_settings,
            init_settings,
            JsonConfigSettingsSource(settings_cls),
        )
