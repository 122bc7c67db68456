"""
Main entry point for the Directed Metric Dimension Toolkit.
"""

import argparse
import os
import sys
from typing import List, Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cli.commands import (  # noqa: E402
    EXIT_BUDGET,
    EXIT_USAGE,
    cmd_dim,
    cmd_gen,
    cmd_ord,
    cmd_verify,
)
from core.exceptions import BudgetExceededError, DirDimError  # noqa: E402
from core.family_spec import FamilyRegistry  # noqa: E402
from core.resolver import MODES  # noqa: E402
from core.verification import THEOREMS  # noqa: E402
from utils.config_loader import ConfigLoader  # noqa: E402
from utils.logger import setup_logger  # noqa: E402

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.yaml")


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> ArgumentParser:
    """
    Build the command-line parser.

    Returns:
        Parser with gen, dim, verify and ord subcommands
    """
    families = ", ".join(name for name, _ in FamilyRegistry.list_families())

    parser = ArgumentParser(
        prog="dirdim",
        description="Directed metric dimension of oriented wheels, fans and cycle amalgamations",
    )
    parser.add_argument(
        "--config",
        type=str,
        default=DEFAULT_CONFIG,
        help="Path to configuration file",
    )

    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    gen = sub.add_parser("gen", help="Generate an oriented family member")
    gen.add_argument("spec", help=f"Family spec, e.g. wheel-c3simple:n=6,variant=A ({families})")
    gen.add_argument("--format", choices=("edgelist", "dot"), default="edgelist")
    gen.add_argument("--out", default=None, help="Output file (default: stdout)")

    dim = sub.add_parser("dim", help="Compute the directed metric dimension")
    dim.add_argument("input", nargs="?", default=None, help="Edge-list file")
    dim.add_argument("--spec", default=None, help="Family spec instead of a file")
    dim.add_argument("--mode", choices=MODES, default=None)
    dim.add_argument("--collect-all", action="store_true", help="Report every minimum basis")
    dim.add_argument("--out", default=None, help="Output file (default: stdout)")

    ver = sub.add_parser("verify", help="Check a dimension statement against brute force")
    ver.add_argument("theorem", type=str.upper, choices=THEOREMS)
    ver.add_argument("--n", default=None, help='Range, e.g. "4..12" or "5,7"')
    ver.add_argument("--m", default=None, help="Center count range (T8)")
    ver.add_argument("--x", default=None, help="Terminal path order range (T11)")
    ver.add_argument("--t", default=None, help="Cycle count range (T11)")
    ver.add_argument("--len", default=None, help="Cycle length range (T11)")
    ver.add_argument("--samples", type=int, default=None, help="Random digraphs (T1)")
    ver.add_argument("--seed", type=int, default=None, help="Random seed (T1)")
    ver.add_argument("--csv", default=None, help="Also write the table as CSV")
    ver.add_argument("--workers", type=int, default=None, help="Process count (0 = all cores)")
    ver.add_argument("--progress", action="store_true")
    ver.add_argument("--out", default=None, help="Output file (default: stdout)")

    orde = sub.add_parser("ord", help="Exhaustive upper orientable dimension")
    orde.add_argument("graph", help="wheel:N, fan:M:N, cycle:N, complete:N or an edge-list file")
    orde.add_argument("--mode", choices=MODES, default=None)
    orde.add_argument("--budget", type=int, default=None, help="Edge budget")
    orde.add_argument("--workers", type=int, default=None, help="Process count (0 = all cores)")
    orde.add_argument("--progress", action="store_true")
    orde.add_argument("--log-csv", default=None, help="Per-orientation CSV log")
    orde.add_argument("--out", default=None, help="Output file (default: stdout)")

    return parser


COMMANDS = {
    "gen": cmd_gen,
    "dim": cmd_dim,
    "verify": cmd_verify,
    "ord": cmd_ord,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = ConfigLoader(args.config)
    except (FileNotFoundError, ValueError) as e:
        print(f"dirdim: failed to load configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger = setup_logger(
        log_path=config.get("logging.path"),
        level=config.get("logging.level", "INFO"),
        max_bytes=int(config.get("logging.max_size", 10485760)),
        backup_count=int(config.get("logging.backup_count", 5)),
        console_level=config.get("logging.console_level"),
    )
    logger.info("dirdim %s", " ".join(argv if argv is not None else sys.argv[1:]))

    try:
        return COMMANDS[args.command](args, config)
    except BudgetExceededError as e:
        logger.error("Budget refused: %s", e)
        print(f"dirdim: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (DirDimError, ValueError, OSError) as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"dirdim: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
