"""Executes a RunManifest: load the source, run the command, write artifacts.

Each command is a function ``(context) -> SummaryReport`` that writes its
CSV artifacts through the context's ArtifactWriter; the runner then writes
summary.json. Any HurstLabError or OSError aborts the run, removes what was
written so far and yields a nonzero exit code.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd
from loguru import logger

from hurstlab import __version__
from hurstlab.core.series import (
    Profile,
    ProfileOrigin,
    ReturnSeries,
    returns_from_profile,
    to_profile,
    to_returns,
)
from hurstlab.dfa.estimator import MIN_SERIES_LENGTH, estimate_hurst
from hurstlab.errors import EstimationError, HurstLabError
from hurstlab.local_hurst.rolling import LocalHurstSeries
from hurstlab.pipeline.artifacts import (
    ArtifactWriter,
    fluctuation_frame,
    hurst_series_frame,
    hurst_series_name,
    pdf_frame,
    pdf_name,
    profile_frame,
    subperiods_frame,
    subperiods_name,
)
from hurstlab.pipeline.ingest import ingest_report
from hurstlab.pipeline.manifest import Command, RunManifest
from hurstlab.pipeline.report import (
    ComparisonBlock,
    ComparisonRow,
    DfaBlock,
    IngestBlock,
    ScaleStats,
    ScalingBlock,
    ScalingPoint,
    SubperiodBlock,
    SummaryReport,
    SynthBlock,
    finite_or_none,
)
from hurstlab.pipeline.studies import StudyRow, rolling_family, shuffle_study, surrogate_study
from hurstlab.resample.protocols import ShuffleSpec, remove_eod_returns
from hurstlab.stats.distribution import (
    MIN_BLOCK_SAMPLES,
    hurst_pdf,
    ks_compare,
    split_subperiods,
    subperiod_samples,
)
from hurstlab.stats.scaling import MIN_SCALES, ScalingFit, mean_h_vs_l, sigma_vs_l
from hurstlab.synth.ensemble import SynthKind
from hurstlab.synth.fbm import FbmSpec, generate_fbm
from hurstlab.synth.levy import LevySpec, generate_levy


@dataclass(slots=True)
class RunOutcome:
    exit_code: int
    artifacts: list[Path] = field(default_factory=list)
    summary: SummaryReport | None = None
    error: str = ""
    hint: str = ""


@dataclass(slots=True)
class _Source:
    returns: ReturnSeries
    profile: Profile
    timestamps: np.ndarray | None = None
    ingest: IngestBlock | None = None
    synth: SynthBlock | None = None


@dataclass(slots=True)
class _Context:
    manifest: RunManifest
    writer: ArtifactWriter
    workers: int
    source: _Source


def _load_source(manifest: RunManifest) -> _Source:
    if manifest.synth is not None:
        spec = manifest.synth
        if spec.kind is SynthKind.FBM:
            profile = generate_fbm(FbmSpec(h=spec.hurst, length=spec.length, seed=manifest.seed))
            nominal = spec.hurst
        else:
            profile = generate_levy(
                LevySpec(alpha=spec.alpha, length=spec.length, seed=manifest.seed)
            )
            nominal = 1.0 / spec.alpha
        logger.info("Generated {} path of {} samples", spec.kind, spec.length)
        return _Source(
            returns=returns_from_profile(profile),
            profile=profile,
            synth=SynthBlock(
                kind=str(spec.kind),
                parameter=spec.parameter,
                nominal_hurst=nominal,
                length=spec.length,
            ),
        )

    report = ingest_report(manifest.input_path, max_reject_fraction=manifest.max_reject_fraction)
    prices = report.prices
    returns = to_returns(prices, manifest.session_offset_minutes)
    boundaries = returns.day_boundaries
    removed = 0
    timestamps = prices.timestamps
    if manifest.eod_filter:
        returns = remove_eod_returns(returns)
        removed = boundaries
        timestamps = np.concatenate([prices.timestamps[:1], returns.timestamps])
        logger.info("End-of-day filter removed {} return(s)", removed)
    if len(returns) == 0:
        raise EstimationError("no returns left after end-of-day filtering")
    profile = to_profile(returns, x0=float(prices.log_prices()[0]), origin=ProfileOrigin.INGESTED)
    return _Source(
        returns=returns,
        profile=profile,
        timestamps=timestamps,
        ingest=IngestBlock(
            total_rows=report.total_rows,
            accepted=report.accepted,
            rejected=len(report.rejections),
            day_boundaries=boundaries,
            eod_removed=removed,
        ),
    )


def _family(ctx: _Context) -> dict[int, LocalHurstSeries]:
    configs = [ctx.manifest.rolling_config(w) for w in ctx.manifest.windows]
    return rolling_family(
        ctx.source.profile, configs, timestamps=ctx.source.timestamps, workers=ctx.workers
    )


def _scale_stats(
    ctx: _Context, family: dict[int, LocalHurstSeries], *, write_pdf: bool
) -> list[ScaleStats]:
    rows = []
    for window, series in family.items():
        ctx.writer.write_csv(hurst_series_name(window), hurst_series_frame(series))
        samples = series.finite_h()
        nan_windows = len(series) - len(samples)
        if samples.size == 0:
            logger.warning("L={}: no finite H samples", window)
            rows.append(
                ScaleStats(
                    window=window,
                    samples=0,
                    nan_windows=nan_windows,
                    mean=None,
                    std=None,
                    mode=None,
                )
            )
            continue
        dist = hurst_pdf(samples, ctx.manifest.bin_width)
        if write_pdf:
            ctx.writer.write_csv(pdf_name(window), pdf_frame(dist))
        rows.append(
            ScaleStats(
                window=window,
                samples=dist.n,
                nan_windows=nan_windows,
                mean=dist.mean,
                std=dist.std,
                mode=dist.mode_bin,
                overflow=dist.overflow,
            )
        )
    return rows


def _scaling_block(fit: ScalingFit) -> ScalingBlock:
    spreads = fit.spread or (None,) * len(fit.points)
    return ScalingBlock(
        points=[
            ScalingPoint(window=w, value=v, spread=None if s is None else finite_or_none(s))
            for (w, v), s in zip(fit.points, spreads, strict=True)
        ],
        exponent=finite_or_none(fit.exponent),
        stderr=finite_or_none(fit.stderr),
        excluded=list(fit.excluded),
    )


def _subperiods(ctx: _Context, family: dict[int, LocalHurstSeries]) -> list[SubperiodBlock]:
    k = ctx.manifest.subperiods
    if not k:
        return []
    blocks = []
    for window, series in family.items():
        dists = split_subperiods(series, k, ctx.manifest.bin_width)
        samples = subperiod_samples(series, k)
        ctx.writer.write_csv(subperiods_name(window), subperiods_frame(dists))
        blocks.append(
            SubperiodBlock(
                window=window,
                k=k,
                samples=[d.n for d in dists],
                means=[d.mean for d in dists],
                modes=[d.mode_bin for d in dists],
                ks_first_last_pvalue=ks_compare(samples[0], samples[-1]).pvalue,
            )
        )
    return blocks


def _scaling(ctx: _Context, family: dict[int, LocalHurstSeries]) -> dict:
    samples = {w: s.finite_h() for w, s in family.items()}
    usable = {w: h for w, h in samples.items() if len(h) >= MIN_BLOCK_SAMPLES}
    sigma = None
    if len(usable) >= MIN_SCALES:
        sigma = _scaling_block(sigma_vs_l(usable))
    else:
        logger.warning(
            "σ_H scaling skipped: {} window length(s) with >= {} samples, {} needed",
            len(usable),
            MIN_BLOCK_SAMPLES,
            MIN_SCALES,
        )
    curve = None
    if len(family) >= 2:
        fit = mean_h_vs_l(family)
        curve = _scaling_block(fit)
        ctx.writer.write_csv(
            "scaling.csv",
            pd.DataFrame(
                {
                    "L": fit.windows,
                    "mean": fit.values,
                    "std": np.array(fit.spread, dtype=np.float64),
                }
            ),
        )
    return {"sigma_scaling": sigma, "mean_h_curve": curve}


def _report(ctx: _Context, **blocks) -> SummaryReport:
    m = ctx.manifest
    return SummaryReport(
        library_version=__version__,
        command=str(m.command),
        seed=m.seed,
        manifest=m.model_dump(mode="json"),
        ingest=ctx.source.ingest,
        synth=ctx.source.synth,
        **blocks,
    )


def _cmd_synth(ctx: _Context) -> SummaryReport:
    ctx.writer.write_csv("profile.csv", profile_frame(ctx.source.profile))
    return _report(ctx)


def _cmd_dfa(ctx: _Context) -> SummaryReport:
    m = ctx.manifest
    profile = ctx.source.profile
    if len(profile) < MIN_SERIES_LENGTH:
        raise EstimationError("series too short")
    curve = estimate_hurst(profile, m.degree, tau_min=m.tau_min, tau_max=m.tau_max)
    ctx.writer.write_csv("fluctuation_curve.csv", fluctuation_frame(curve))
    logger.info("DFA-{}: H = {:.4f} over {} scales", m.degree, curve.hurst, len(curve.points))
    dfa = DfaBlock(
        hurst=curve.hurst,
        stderr=finite_or_none(curve.fit_stderr),
        r2=finite_or_none(curve.fit_r2),
        degree=m.degree,
        scales=len(curve.points),
        fit_points=curve.fit_points,
    )
    return _report(ctx, dfa=dfa)


def _cmd_pdf(ctx: _Context) -> SummaryReport:
    family = _family(ctx)
    return _report(
        ctx, scales=_scale_stats(ctx, family, write_pdf=True), subperiods=_subperiods(ctx, family)
    )


def _cmd_scaling(ctx: _Context) -> SummaryReport:
    family = _family(ctx)
    return _report(ctx, scales=_scale_stats(ctx, family, write_pdf=False), **_scaling(ctx, family))


def _cmd_analyze(ctx: _Context) -> SummaryReport:
    family = _family(ctx)
    return _report(
        ctx,
        scales=_scale_stats(ctx, family, write_pdf=True),
        subperiods=_subperiods(ctx, family),
        **_scaling(ctx, family),
    )


def _comparison(
    protocol: str, repeats: int, scales: list[ScaleStats], resampled: dict[int, StudyRow]
) -> ComparisonBlock:
    rows = []
    for stats in scales:
        row = resampled[stats.window]
        rows.append(
            ComparisonRow(
                window=stats.window,
                original_mean=stats.mean,
                original_std=stats.std,
                resampled_mean=finite_or_none(row.mean),
                resampled_std=finite_or_none(row.std),
                delta_h_over_h=finite_or_none(row.delta_h_over_h),
            )
        )
    return ComparisonBlock(protocol=protocol, repeats=repeats, rows=rows)


def _study_inputs(ctx: _Context):
    m = ctx.manifest
    family = _family(ctx)
    scales = _scale_stats(ctx, family, write_pdf=True)
    configs = [m.rolling_config(w) for w in m.windows]
    return scales, configs, ShuffleSpec(repeats=m.repeats, seed=m.seed)


def _cmd_shuffle_test(ctx: _Context) -> SummaryReport:
    scales, configs, spec = _study_inputs(ctx)
    shuffled = shuffle_study(ctx.source.returns, spec, configs, workers=ctx.workers)
    return _report(
        ctx, scales=scales, comparisons=[_comparison("shuffle", spec.repeats, scales, shuffled)]
    )


def _cmd_surrogate_test(ctx: _Context) -> SummaryReport:
    scales, configs, spec = _study_inputs(ctx)
    plain, shuffled = surrogate_study(ctx.source.returns, spec, configs, workers=ctx.workers)
    return _report(
        ctx,
        scales=scales,
        comparisons=[
            _comparison("surrogate", 1, scales, plain),
            _comparison("surrogate-shuffled", spec.repeats, scales, shuffled),
        ],
    )


_OUTPUT_HINT = "Check that --output is a writable directory with free space."

_COMMANDS: dict[Command, Callable[[_Context], SummaryReport]] = {
    Command.SYNTH: _cmd_synth,
    Command.DFA: _cmd_dfa,
    Command.PDF: _cmd_pdf,
    Command.SCALING: _cmd_scaling,
    Command.ANALYZE: _cmd_analyze,
    Command.SHUFFLE_TEST: _cmd_shuffle_test,
    Command.SURROGATE_TEST: _cmd_surrogate_test,
}


def run(manifest: RunManifest, *, workers: int = 1) -> RunOutcome:
    """Run one command; never raises HurstLabError, reports it in the outcome instead.

    Filesystem errors are reported the same way. Anything else is re-raised,
    but only after the partial output has been removed.
    """
    writer = ArtifactWriter(manifest.output_dir)
    with logger.contextualize(command=str(manifest.command)):
        logger.info("Running {} into {}", manifest.command, manifest.output_dir)
        try:
            ctx = _Context(manifest, writer, workers, _load_source(manifest))
            summary = _COMMANDS[manifest.command](ctx)
            writer.write_text("summary.json", summary.to_json())
        except HurstLabError as exc:
            logger.error("{} failed: {}", manifest.command, exc)
            writer.rollback()
            return RunOutcome(exit_code=1, error=str(exc), hint=exc.hint)
        except OSError as exc:
            logger.error("{} failed writing output: {}", manifest.command, exc)
            writer.rollback()
            return RunOutcome(exit_code=1, error=str(exc), hint=_OUTPUT_HINT)
        except Exception:
            logger.exception("{} aborted", manifest.command)
            writer.rollback()
            raise
        logger.info("{} finished: {} file(s) written", manifest.command, len(writer.written))
    return RunOutcome(exit_code=0, artifacts=writer.written, summary=summary)
