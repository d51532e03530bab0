"""RunManifest: one fully validated description of a hurstlab run.

The CLI builds a manifest from flags and config; the runner consumes it.
Every numeric field is checked against the preconditions of the module
that will use it, so a bad flag fails here and not halfway through a run.
"""

from __future__ import annotations

from enum import StrEnum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hurstlab.config.schema import DEFAULT_WINDOWS, MIN_WINDOW
from hurstlab.local_hurst.rolling import RollingConfig
from hurstlab.synth.ensemble import SynthKind

# Bumped whenever the columns or layout of an output change.
FORMAT_VERSIONS: dict[str, str] = {
    "hurst_series": "1",
    "pdf": "1",
    "subperiods": "1",
    "scaling": "1",
    "fluctuation_curve": "1",
    "profile": "1",
    "summary": "1.0",
}


class Command(StrEnum):
    ANALYZE = "analyze"
    DFA = "dfa"
    SYNTH = "synth"
    SHUFFLE_TEST = "shuffle-test"
    SURROGATE_TEST = "surrogate-test"
    PDF = "pdf"
    SCALING = "scaling"

    @property
    def uses_windows(self) -> bool:
        return self not in (Command.DFA, Command.SYNTH)


class SynthSource(BaseModel):
    """A synthetic input path in place of a price file."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: SynthKind
    hurst: float | None = Field(default=None, gt=0.0, lt=1.0)
    alpha: float | None = Field(default=None, gt=0.0, le=2.0)
    length: int = Field(default=65536, ge=2)

    @model_validator(mode="after")
    def _check_parameter(self) -> SynthSource:
        if self.kind is SynthKind.FBM and self.hurst is None:
            raise ValueError("fbm synthesis needs --hurst")
        if self.kind is SynthKind.LEVY and self.alpha is None:
            raise ValueError("levy synthesis needs --alpha")
        return self

    @property
    def parameter(self) -> float:
        return self.hurst if self.kind is SynthKind.FBM else self.alpha


class RunManifest(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    output_dir: Path
    input_path: Path | None = None
    synth: SynthSource | None = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    windows: list[int] = Field(default_factory=lambda: list(DEFAULT_WINDOWS))
    shift: int = Field(default=10, ge=1)
    degree: int = Field(default=2, ge=0, le=8)
    tau_min: int | None = Field(default=None, ge=2)
    tau_max: int | None = Field(default=None, ge=3)
    eod_filter: bool = False
    session_offset_minutes: int = Field(default=0, ge=-1440, le=1440)
    subperiods: int = Field(default=0, ge=0)
    repeats: int = Field(default=5, ge=1, le=1000)
    bins: int = Field(default=50, ge=2, le=1000)
    max_reject_fraction: float = Field(default=0.01, ge=0.0, le=1.0)
    format_versions: dict[str, str] = Field(default_factory=lambda: dict(FORMAT_VERSIONS))

    @field_validator("windows")
    @classmethod
    def _check_windows(cls, value: list[int]) -> list[int]:
        if not value:
            raise ValueError("at least one window is required")
        too_small = [w for w in value if w < MIN_WINDOW]
        if too_small:
            raise ValueError(f"windows below the {MIN_WINDOW}-sample noise floor: {too_small}")
        return sorted(set(value))

    @field_validator("subperiods")
    @classmethod
    def _check_subperiods(cls, value: int) -> int:
        if value == 1:
            raise ValueError("subperiods must be 0 (off) or >= 2")
        return value

    @model_validator(mode="after")
    def _check_consistency(self) -> RunManifest:
        if (self.input_path is None) == (self.synth is None):
            raise ValueError("give exactly one of --input or --synth")
        if self.command is Command.SYNTH and self.synth is None:
            raise ValueError("the synth command needs --synth")
        if self.eod_filter and self.input_path is None:
            raise ValueError("--eod-filter needs timestamped --input data")

        lowest = self.tau_min if self.tau_min is not None else max(8, self.degree + 2)
        if lowest < self.degree + 2:
            raise ValueError(f"taus-min {lowest} is below degree+2 = {self.degree + 2}")
        if self.tau_max is not None:
            if self.tau_max < lowest:
                raise ValueError(f"taus-max {self.tau_max} is below taus-min {lowest}")
            if self.command.uses_windows and 4 * self.tau_max > self.windows[0]:
                raise ValueError(
                    f"taus-max {self.tau_max} exceeds L/4 for the smallest window {self.windows[0]}"
                )
        elif self.command.uses_windows and 4 * lowest > self.windows[0]:
            raise ValueError(f"taus-min {lowest} leaves no scales in window {self.windows[0]}")
        return self

    @property
    def bin_width(self) -> float:
        return 1.0 / self.bins

    def rolling_config(self, window: int) -> RollingConfig:
        return RollingConfig(
            window=window,
            shift=self.shift,
            p=self.degree,
            tau_min=self.tau_min,
            tau_max=self.tau_max,
        )
