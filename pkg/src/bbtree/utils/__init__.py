"""Utilities module."""

from .helpers import parse_edge_list, parse_q_list, read_input
from .logging import get_logger, setup_logging

__all__ = ["setup_logging", "get_logger", "read_input", "parse_edge_list", "parse_q_list"]
