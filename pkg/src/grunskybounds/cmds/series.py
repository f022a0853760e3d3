from __future__ import annotations

import argparse
import sys

from ..core import (
    CatalogueFunction,
    build_run_config,
    compute_odd_grunsky,
    render,
    require_format,
    select_functions,
    series_csv,
    series_payload,
    series_text,
    sqrt_transform,
    write_output,
)


def warn_if_unverified(item: CatalogueFunction) -> None:
    if not item.univalence_verified:
        print(
            f"Warning: `{item.name}` coefficients are not verified univalent; results may violate class-S bounds",
            file=sys.stderr,
        )


def command_series(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    fmt = require_format(config, ["json", "csv", "text"])
    (item,) = select_functions(config.fn, config.order, config.coeffs)
    warn_if_unverified(item)
    table = compute_odd_grunsky(item.series, config.cap, item.name)
    payload = series_payload(item.name, item.series, sqrt_transform(item.series), table, item.univalence_verified)
    write_output(render(payload, fmt, series_text(payload), series_csv(payload)), config.output)
    return 0
