"""
Utility modules for the directed metric dimension toolkit.
"""

from .config_loader import ConfigLoader
from .logger import setup_logger
from .workers import ordered_map, resolve_workers

__all__ = [
    "ConfigLoader",
    "setup_logger",
    "ordered_map",
    "resolve_workers",
]
