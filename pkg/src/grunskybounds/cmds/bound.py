from __future__ import annotations

import argparse
import sys
from typing import Any

from ..core import (
    PROG_NAME,
    PUBLISHED_BOUNDS,
    SUMMARY_HEADER,
    TARGET_CHOICES,
    TARGET_FUNCTIONS,
    RunConfig,
    bound_text,
    build_run_config,
    certified_max,
    csv_text,
    enclosure_matches,
    get_bound_function,
    global_max,
    grid_search,
    json_float,
    prefix_matches,
    render,
    require_format,
    summary_rows,
    summary_text,
    theorem_h31_bound,
    write_output,
)


def note(config: RunConfig, message: str) -> None:
    if not config.quiet:
        print(f"[{PROG_NAME}] {message}", file=sys.stderr)


def _pair(values) -> list[float] | None:
    return None if values is None else [json_float(v) for v in values]


def _matches(target: str, value: float, enclosure) -> bool:
    published = PUBLISHED_BOUNDS[target]
    if enclosure is not None:
        return enclosure_matches(enclosure, published.value, published.digits)
    return prefix_matches(value, published.value, published.digits)


def single_bound(target: str, config: RunConfig) -> dict[str, Any]:
    fn = get_bound_function(TARGET_FUNCTIONS[target])
    if config.method == "certified":
        result = certified_max(fn, config.eps, box_cap=config.box_cap)
        note(config, f"certified {fn.name}: {result.boxes} boxes processed")
    elif config.method == "grid":
        result = grid_search(fn, config.nx, config.ny)
    else:
        result = global_max(fn, config.tol)
    published = PUBLISHED_BOUNDS[target]
    return {
        "target": target,
        "function": fn.name,
        "value": json_float(result.value),
        "argmax": _pair(result.argmax),
        "edge": result.location,
        "enclosure": _pair(result.enclosure),
        "method": result.method,
        "published": published.value,
        "match": _matches(target, result.value, result.enclosure),
        "previous": published.previous,
    }


def h31_bound(config: RunConfig) -> dict[str, Any]:
    h = theorem_h31_bound(
        config.tol,
        config.method,
        eps=config.eps,
        box_cap=config.box_cap,
        nx=config.nx,
        ny=config.ny,
    )
    if h.method == "certified":
        note(config, f"certified PHI1: {h.b1_result.boxes} boxes, PHI2: {h.b2_result.boxes} boxes processed")
    published = PUBLISHED_BOUNDS["h31"]
    return {
        "target": "h31",
        "function": "PHI1 + 4 PHI2^2",
        "value": json_float(h.total),
        "argmax": None,
        "edge": None,
        "enclosure": _pair(h.total_enclosure),
        "method": h.method,
        "components": {
            "b1": json_float(h.b1),
            "b2": json_float(h.b2),
            "b1_argmax": _pair(h.b1_result.argmax),
            "b1_edge": h.b1_result.location,
            "b2_argmax": _pair(h.b2_result.argmax),
            "b2_edge": h.b2_result.location,
            "b2_enclosure": _pair(h.b2_enclosure),
        },
        "published": published.value,
        "match": _matches("h31", h.total, h.total_enclosure),
        "announced": published.announced,
        "previous": published.previous,
    }


def bound_payload(target: str, config: RunConfig) -> dict[str, Any]:
    payload = h31_bound(config) if target == "h31" else single_bound(target, config)
    if not payload["match"]:
        print(
            f"Warning: `{target}` computed {payload['value']} does not match published {payload['published']}",
            file=sys.stderr,
        )
    return payload


def command_bound(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    fmt = require_format(config, ["json", "csv", "text"])
    targets = TARGET_CHOICES if config.target == "all" else [config.target]
    payloads = [bound_payload(target, config) for target in targets]
    table = csv_text(SUMMARY_HEADER, summary_rows(payloads))
    if config.target == "all":
        text = render({"targets": payloads}, fmt, summary_text(payloads), table)
    else:
        text = render(payloads[0], fmt, bound_text(payloads[0]), table)
    write_output(text, config.output)
    return 0
