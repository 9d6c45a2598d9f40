"""Command-line module."""

from .commands import main, run

__all__ = ["main", "run"]
