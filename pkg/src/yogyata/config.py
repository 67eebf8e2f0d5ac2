"""Service and CLI configuration: defaults, config file, environment.

Precedence, lowest to highest: built-in defaults, a JSON config file,
``YOGYATA_*`` environment variables, explicit keyword overrides from the
caller (CLI flags).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Optional

from .errors import ValidationError
from .jsonio import read_document

ENV_PREFIX = "YOGYATA_"
DEFAULT_DATA_DIR = "yogyata-data"


@dataclass(frozen=True)
class AppConfig:
    data_dir: Path = field(default_factory=lambda: Path(DEFAULT_DATA_DIR))
    host: str = "127.0.0.1"
    port: int = 8000
    session_ttl_hours: float = 24.0
    accounts_file: Optional[Path] = None

    def resolved_accounts_file(self) -> Path:
        if self.accounts_file is not None:
            return self.accounts_file
        return self.data_dir / "accounts.json"


_FILE_KEYS = {"data_dir", "host", "port", "session_ttl_hours", "accounts_file"}


def _coerce(key: str, value):
    if value is None:
        return None
    if key in ("data_dir", "accounts_file"):
        return Path(value)
    if key == "port":
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ValidationError(f"config: port must be an integer, got {value!r}") from None
    if key == "session_ttl_hours":
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ValidationError(
                f"config: session_ttl_hours must be a number, got {value!r}") from None
    return str(value)


def load_config(config_file=None, env: Optional[Mapping[str, str]] = None,
                **overrides) -> AppConfig:
    """Assemble an AppConfig from file, environment, and explicit overrides."""
    env = os.environ if env is None else env
    config = AppConfig()
    if config_file is not None:
        doc = read_document(Path(config_file), "config")
        if not isinstance(doc, dict):
            raise ValidationError("config: expected a JSON object")
        unknown = set(doc) - _FILE_KEYS
        if unknown:
            raise ValidationError(f"config: unknown keys {sorted(unknown)}")
        config = replace(config, **{k: _coerce(k, v) for k, v in doc.items()})
    env_map = {}
    for key in _FILE_KEYS:
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None and raw != "":
            env_map[key] = _coerce(key, raw)
    if env_map:
        config = replace(config, **env_map)
    cleaned = {k: _coerce(k, v) for k, v in overrides.items() if v is not None}
    unknown = set(cleaned) - _FILE_KEYS
    if unknown:
        raise ValidationError(f"config: unknown overrides {sorted(unknown)}")
    if cleaned:
        config = replace(config, **cleaned)
    return config
