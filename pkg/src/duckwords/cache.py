"""Flat-file JSON result cache, content-addressed by command, parameters,
and library version so stale entries are never served across releases."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "DUCKWORDS_CACHE_DIR"


def cache_key(command: str, params: dict, version: str) -> str:
    blob = json.dumps(
        {"command": command, "params": params, "version": version},
        sort_keys=True, separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def resolve_dir(explicit: str | None) -> Path | None:
    path = explicit or os.environ.get(ENV_VAR)
    return Path(path) if path else None


def load(directory: Path | None, key: str):
    if directory is None:
        return None
    path = directory / f"{key}.json"
    if not path.is_file():
        return None
    try:
        return json.loads(path.read_text())["payload"]
    except (json.JSONDecodeError, KeyError):
        return None


def store(directory: Path | None, key: str, payload) -> None:
    if directory is None:
        return
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"{key}.json").write_text(
        json.dumps({"key": key, "payload": payload}, sort_keys=True)
    )
