from __future__ import annotations

from .cmds.bound import command_bound
from .cmds.grid import command_grid
from .cmds.series import command_series
from .cmds.verify import command_verify

__all__ = [
    "command_bound",
    "command_grid",
    "command_series",
    "command_verify",
]
