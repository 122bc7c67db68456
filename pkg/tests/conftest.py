"""
Shared fixtures.
"""

import logging
import os

import pytest
import yaml
from hypothesis import settings

from core.digraph import build_digraph

settings.register_profile("default", deadline=None, max_examples=1000)
settings.register_profile("quick", deadline=None, max_examples=100)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(autouse=True)
def reset_loggers():
    """Detach handlers installed by main() so later tests do not write to closed streams."""
    yield
    for name in ("dirdim", "cli", "core", "utils"):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()
        logger.propagate = True
        logger.setLevel(logging.NOTSET)


@pytest.fixture
def triangle():
    """Directed triangle 0 -> 1 -> 2 -> 0."""
    return build_digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path3():
    """Directed path 0 -> 1 -> 2 (not strongly connected)."""
    return build_digraph(3, [(0, 1), (1, 2)])


@pytest.fixture
def w4a_arcs():
    """Arc set of the C3-simple W_4, variant A (c = 0)."""
    return {(0, 1), (0, 3), (1, 2), (1, 4), (3, 4), (3, 2), (2, 0), (4, 0)}


@pytest.fixture
def config_file(tmp_path):
    """Repository config with the log file moved into tmp_path."""
    with open(os.path.join(REPO_ROOT, "config.yaml"), "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)
    config["logging"]["path"] = str(tmp_path / "logs" / "dirdim.log")
    config["search"]["workers"] = 1
    path = tmp_path / "config.yaml"
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(config, f)
    return str(path)
