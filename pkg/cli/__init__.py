"""
Command-line commands for the directed metric dimension toolkit.
"""

from .commands import (
    EXIT_BUDGET,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    cmd_dim,
    cmd_gen,
    cmd_ord,
    cmd_verify,
)

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_MISMATCH",
    "EXIT_BUDGET",
    "cmd_gen",
    "cmd_dim",
    "cmd_verify",
    "cmd_ord",
]
