"""summary.json models.

The JSON layout is pinned by hurstlab/schemas/summary.schema.json; bump
``SUMMARY_SCHEMA_VERSION`` together with that file. Non-finite floats are
written as null.
"""

from __future__ import annotations

import math
from importlib import resources

from pydantic import BaseModel, ConfigDict, Field

SUMMARY_SCHEMA_VERSION = "1.0"


def finite_or_none(value: float) -> float | None:
    return float(value) if math.isfinite(value) else None


class _Block(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class ScaleStats(_Block):
    """Distribution of H_L(t) at one window length."""

    window: int
    samples: int
    nan_windows: int = 0
    mean: float | None
    std: float | None
    mode: float | None
    overflow: int = 0


class ScalingPoint(_Block):
    window: int
    value: float
    spread: float | None = None


class ScalingBlock(_Block):
    points: list[ScalingPoint]
    exponent: float | None
    stderr: float | None
    excluded: list[int] = Field(default_factory=list)


class ComparisonRow(_Block):
    """Original vs resampled ⟨H⟩_L at one window, with ΔH/H = (⟨H⟩ − 0.5) / 0.5."""

    window: int
    original_mean: float | None
    original_std: float | None
    resampled_mean: float | None
    resampled_std: float | None
    delta_h_over_h: float | None


class ComparisonBlock(_Block):
    protocol: str
    repeats: int
    rows: list[ComparisonRow]


class SubperiodBlock(_Block):
    window: int
    k: int
    samples: list[int]
    means: list[float]
    modes: list[float]
    ks_first_last_pvalue: float


class DfaBlock(_Block):
    hurst: float
    stderr: float | None
    r2: float | None
    degree: int
    scales: int
    fit_points: int


class SynthBlock(_Block):
    kind: str
    parameter: float
    nominal_hurst: float
    length: int


class IngestBlock(_Block):
    total_rows: int
    accepted: int
    rejected: int
    day_boundaries: int
    eod_removed: int


class SummaryReport(_Block):
    schema_version: str = SUMMARY_SCHEMA_VERSION
    library_version: str
    command: str
    seed: int
    manifest: dict
    ingest: IngestBlock | None = None
    synth: SynthBlock | None = None
    dfa: DfaBlock | None = None
    scales: list[ScaleStats] = Field(default_factory=list)
    sigma_scaling: ScalingBlock | None = None
    mean_h_curve: ScalingBlock | None = None
    comparisons: list[ComparisonBlock] = Field(default_factory=list)
    subperiods: list[SubperiodBlock] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def load_summary_schema() -> str:
    """Text of the summary.json schema shipped with the package."""
    return resources.files("hurstlab.schemas").joinpath("summary.schema.json").read_text("utf-8")
