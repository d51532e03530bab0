"""Config file I/O: load from JSON, merge env vars, save back to disk."""

from __future__ import annotations

import json
from pathlib import Path

from hurstlab.config.schema import HurstLabConfig


def get_config_path() -> Path:
    return Path.home() / ".hurstlab" / "config.json"


def load_config(path: Path | None = None) -> HurstLabConfig:
    """Load config from a JSON file, falling back to defaults if it is missing.

    Environment variables with the HURSTLAB_ prefix override file values.
    Nested keys use __ as delimiter (e.g. HURSTLAB_DFA__DEGREE).
    """
    config_path = (path or get_config_path()).expanduser().resolve()

    if config_path.exists():
        raw = json.loads(config_path.read_text(encoding="utf-8"))
        return HurstLabConfig(**raw)

    return HurstLabConfig()


def save_config(config: HurstLabConfig, path: Path | None = None) -> Path:
    """Serialize config to JSON and write it atomically (temp file, then rename)."""
    config_path = (path or get_config_path()).expanduser().resolve()
    config_path.parent.mkdir(parents=True, exist_ok=True)

    data = config.model_dump(mode="json", exclude_none=True)
    tmp_path = config_path.with_suffix(".tmp")
    tmp_path.write_text(json.dumps(data, indent=2, ensure_ascii=False), encoding="utf-8")
    tmp_path.rename(config_path)
    return config_path
