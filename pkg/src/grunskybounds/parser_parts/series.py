from __future__ import annotations

from argparse import ArgumentParser, _SubParsersAction

from ..commands import command_series, command_verify
from ..core import FUNCTION_CHOICES


def add_function_options(parser: ArgumentParser, choices: list[str]) -> None:
    parser.add_argument("--fn", choices=choices, required=True, help="Function to expand.")
    parser.add_argument("--coeffs", help="Comma-separated a_0..a_n for --fn custom, integers or p/q (must begin 0,1).")
    parser.add_argument("--order", type=int, help="Truncation order of f (default 10).")


def add_output_options(parser: ArgumentParser, formats: list[str]) -> None:
    parser.add_argument("--format", choices=formats, help="Output format (default text).")
    parser.add_argument("--output", help="Write to this file instead of stdout.")


def register_series_commands(subparsers: _SubParsersAction) -> None:
    p_series = subparsers.add_parser("series", help="Print f, f2 and the odd Grunsky table.")
    add_function_options(p_series, FUNCTION_CHOICES)
    p_series.add_argument("--cap", type=int, help="Total-degree cap of the Grunsky table (default 8).")
    add_output_options(p_series, ["json", "csv", "text"])
    p_series.set_defaults(func=command_series)

    p_verify = subparsers.add_parser("verify", help="Check the coefficient identities exactly.")
    add_function_options(p_verify, ["all", *FUNCTION_CHOICES])
    add_output_options(p_verify, ["json", "text"])
    p_verify.set_defaults(func=command_verify)
