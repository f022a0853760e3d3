from __future__ import annotations

import argparse
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .app_constants import (
    BOX_CAP_ENV,
    DEFAULT_SETTINGS,
    MAX_ORDER,
    METHOD_CHOICES,
    MIN_CAP,
    MIN_ORDER,
    OUTPUT_FORMATS,
)
from .catalogue import parse_coefficients
from .errors import UsageError
from .mapping_io import load_mapping_file

INT_KEYS = {"order", "cap", "box_cap", "nx", "ny"}
FLOAT_KEYS = {"eps", "tol"}


@dataclass
class RunConfig:
    command: str
    order: int
    cap: int
    eps: float
    tol: float
    box_cap: int
    method: str
    format: str
    nx: int
    ny: int
    fn: str | None = None
    coeffs: list[Fraction] | None = None
    target: str | None = None
    output: Path | None = None
    quiet: bool = False


def coerce_setting(key: str, value: Any, origin: str) -> Any:
    if key in INT_KEYS:
        if isinstance(value, bool) or not isinstance(value, int):
            raise UsageError(f"Setting `{key}` from {origin} must be an integer, got `{value}`")
        return value
    if key in FLOAT_KEYS:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise UsageError(f"Setting `{key}` from {origin} must be a number, got `{value}`")
        return float(value)
    if not isinstance(value, str):
        raise UsageError(f"Setting `{key}` from {origin} must be a string, got `{value}`")
    return value


def load_settings_file(path: Path) -> dict[str, Any]:
    raw = load_mapping_file(path)
    unknown = sorted(set(raw) - set(DEFAULT_SETTINGS))
    if unknown:
        raise UsageError(f"Unknown setting(s) in {path}: {', '.join(unknown)}")
    return {key: coerce_setting(key, value, str(path)) for key, value in raw.items()}


def env_box_cap() -> int | None:
    raw = os.environ.get(BOX_CAP_ENV, "").strip()
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{BOX_CAP_ENV} must be an integer, got `{raw}`") from None


def validate_settings(settings: dict[str, Any]) -> None:
    if not settings["eps"] > 0:
        raise UsageError(f"eps must be positive, got `{settings['eps']}`")
    if not settings["tol"] > 0:
        raise UsageError(f"tol must be positive, got `{settings['tol']}`")
    order = settings["order"]
    if not MIN_ORDER <= order <= MAX_ORDER:
        raise UsageError(f"order must lie in [{MIN_ORDER}, {MAX_ORDER}], got `{order}`")
    cap = settings["cap"]
    if not MIN_CAP <= cap <= 2 * order - 1:
        raise UsageError(f"cap must lie in [{MIN_CAP}, {2 * order - 1}] for order {order}, got `{cap}`")
    for key in ("nx", "ny"):
        if settings[key] < 2:
            raise UsageError(f"{key} must be at least 2, got `{settings[key]}`")
    if settings["box_cap"] < 1:
        raise UsageError(f"box_cap must be at least 1, got `{settings['box_cap']}`")
    if settings["method"] not in METHOD_CHOICES:
        raise UsageError(f"method must be one of: {', '.join(METHOD_CHOICES)}")
    if settings["format"] not in OUTPUT_FORMATS:
        raise UsageError(f"format must be one of: {', '.join(OUTPUT_FORMATS)}")


def build_run_config(args: argparse.Namespace) -> RunConfig:
    settings = dict(DEFAULT_SETTINGS)
    if getattr(args, "config", None):
        settings.update(load_settings_file(Path(args.config)))
    box_cap = env_box_cap()
    if box_cap is not None:
        settings["box_cap"] = box_cap
    for key in DEFAULT_SETTINGS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    validate_settings(settings)

    coeffs = None
    fn = getattr(args, "fn", None)
    raw_coeffs = getattr(args, "coeffs", None)
    if fn == "custom":
        if not raw_coeffs:
            raise UsageError("--fn custom needs --coeffs, e.g. `--coeffs 0,1,2,3`")
        coeffs = parse_coefficients(raw_coeffs)
    elif raw_coeffs:
        raise UsageError("--coeffs is only used with --fn custom")

    output = getattr(args, "output", None)
    return RunConfig(
        command=args.command,
        fn=fn,
        coeffs=coeffs,
        target=getattr(args, "target", None),
        output=Path(output) if output else None,
        quiet=bool(getattr(args, "quiet", False)),
        **settings,
    )


def require_format(config: RunConfig, allowed: list[str]) -> str:
    if config.format not in allowed:
        raise UsageError(f"`{config.command}` output format must be one of: {', '.join(allowed)}; got `{config.format}`")
    return config.format
