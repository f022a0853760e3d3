from __future__ import annotations

from argparse import _SubParsersAction

from ..commands import command_bound, command_grid
from ..core import GRID_TARGET_CHOICES, METHOD_CHOICES, TARGET_CHOICES
from .series import add_output_options


def register_bound_commands(subparsers: _SubParsersAction) -> None:
    p_bound = subparsers.add_parser("bound", help="Maximize the majorant behind a coefficient bound.")
    p_bound.add_argument("--target", choices=[*TARGET_CHOICES, "all"], required=True, help="Bound to reproduce.")
    p_bound.add_argument("--method", choices=METHOD_CHOICES, help="newton (default), grid or certified.")
    p_bound.add_argument("--eps", type=float, help="Certified enclosure width (default 1e-6).")
    p_bound.add_argument("--tol", type=float, help="Newton and edge tolerance (default 1e-10).")
    p_bound.add_argument("--box-cap", dest="box_cap", type=int, help="Branch-and-bound box limit (default 10000000).")
    p_bound.add_argument("--nx", type=int, help="Grid points along x for --method grid.")
    p_bound.add_argument("--ny", type=int, help="Grid points along y for --method grid.")
    add_output_options(p_bound, ["json", "csv", "text"])
    p_bound.set_defaults(func=command_bound)

    p_grid = subparsers.add_parser("grid", help="Export objective values on a grid of E as CSV.")
    p_grid.add_argument("--target", choices=GRID_TARGET_CHOICES, required=True, help="Objective to sample.")
    p_grid.add_argument("--nx", type=int, help="Grid points along x (default 201).")
    p_grid.add_argument("--ny", type=int, help="Grid points along y (default 201).")
    p_grid.add_argument("--output", help="Write to this file instead of stdout.")
    p_grid.set_defaults(func=command_grid)
