from __future__ import annotations

import argparse

from .parser_parts.bounds import register_bound_commands
from .parser_parts.series import register_series_commands


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grunskybounds",
        description="Grunsky coefficients, coefficient identities and certified bounds for univalent functions.",
    )
    parser.add_argument("--config", help="Settings file (.json, .yaml or .yml).")
    parser.add_argument("--quiet", action="store_true", help="Suppress progress notes on stderr.")

    subparsers = parser.add_subparsers(dest="command", required=True)
    register_series_commands(subparsers)
    register_bound_commands(subparsers)
    return parser
