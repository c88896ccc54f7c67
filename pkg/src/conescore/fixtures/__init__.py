"""Bundled problem-file fixtures used by the test suite and as CLI examples."""

from importlib import resources
from pathlib import Path


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture JSON file."""
    return Path(resources.files(__package__) / name)
