from hurstlab.pipeline.artifacts import read_hurst_series, read_profile_csv
from hurstlab.pipeline.ingest import IngestReport, RowRejection, ingest_csv, ingest_report
from hurstlab.pipeline.manifest import FORMAT_VERSIONS, Command, RunManifest, SynthSource
from hurstlab.pipeline.report import SUMMARY_SCHEMA_VERSION, SummaryReport, load_summary_schema
from hurstlab.pipeline.runner import RunOutcome, run
from hurstlab.pipeline.studies import StudyRow, shuffle_study, surrogate_study

__all__ = [
    "FORMAT_VERSIONS",
    "SUMMARY_SCHEMA_VERSION",
    "Command",
    "IngestReport",
    "RowRejection",
    "RunManifest",
    "RunOutcome",
    "StudyRow",
    "SummaryReport",
    "SynthSource",
    "ingest_csv",
    "ingest_report",
    "load_summary_schema",
    "read_hurst_series",
    "read_profile_csv",
    "run",
    "shuffle_study",
    "surrogate_study",
]
