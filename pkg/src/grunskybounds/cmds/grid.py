from __future__ import annotations

import argparse

from ..core import build_run_config, csv_text, fmt_float, get_bound_function, region_grid, write_output


def command_grid(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    fn = get_bound_function(config.target)
    xs, ys = region_grid(config.nx, config.ny)
    values = fn.value(xs, ys)
    rows = (
        [fmt_float(float(x)), fmt_float(float(y)), fmt_float(float(v))]
        for x, y, v in zip(xs, ys, values)
    )
    write_output(csv_text(["x", "y", "value"], rows), config.output)
    return 0
