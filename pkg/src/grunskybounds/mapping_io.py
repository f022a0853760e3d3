from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

import yaml

from .app_constants import SETTINGS_EXT_TO_FORMAT
from .errors import UsageError


def load_mapping_file(path: Path) -> dict[str, Any]:
    fmt = SETTINGS_EXT_TO_FORMAT.get(path.suffix.lower())
    if fmt is None:
        raise UsageError(f"Unsupported settings extension `{path.suffix}`. Use .json, .yaml or .yml.")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"Cannot read settings file {path}: {exc.strerror}") from exc
    if fmt == "json":
        try:
            out = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"Invalid JSON in {path}: {exc}") from exc
    else:
        try:
            out = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise UsageError(f"Invalid YAML in {path}: {exc}") from exc
    if out is None:
        return {}
    if not isinstance(out, dict):
        raise UsageError(f"Settings file {path} must contain an object/map")
    return out


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_output(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as exc:
        raise UsageError(f"Cannot write output to {path}: {exc.strerror}") from exc
