"""Canonical JSON reading/writing for the seed and export files.

All on-disk documents are UTF-8 JSON with a fixed key order, two-space
indentation and a trailing newline, so that export after load reproduces a
canonical file byte for byte.
"""

import json
from pathlib import Path

from .errors import ParseError


def canonical_dumps(obj) -> str:
    """Serialize with stable formatting (insertion key order is preserved)."""
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def loads(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def read_document(path, what: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{what}: cannot read {path}: {exc}") from exc
    return loads(text, what)


def write_document(path, obj) -> None:
    Path(path).write_text(canonical_dumps(obj), encoding="utf-8")


def expect_key(record, key: str, what: str):
    if not isinstance(record, dict) or key not in record:
        raise ParseError(f"{what}: record {summarize(record)} lacks required field {key!r}")
    return record[key]


def summarize(record) -> str:
    if isinstance(record, dict):
        for probe in ("id", "root", "headword", "form"):
            if probe in record:
                return f"{{{probe}={record[probe]!r}}}"
    text = repr(record)
    return text if len(text) <= 60 else text[:57] + "..."
