"""Helper utilities for command-line input handling."""

from pathlib import Path
from typing import BinaryIO

from ..errors import InvalidParameterError
from .logging import get_logger

logger = get_logger(__name__)

STDIN_PATH = "-"


def read_input(path: str, stdin: BinaryIO) -> bytes:
    """Read a whole input file as bytes; '-' means stdin."""
    if path == STDIN_PATH:
        data = stdin.read()
        logger.debug("Read input from stdin", size=len(data))
        return data
    data = Path(path).read_bytes()
    logger.debug("Read input file", path=path, size=len(data))
    return data


def parse_edge_list(text: bytes | str) -> list[tuple[int, int]]:
    """Parse one 0-based `u v` pair per line; blank lines and `#` comments are skipped."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InvalidParameterError(f"edge list is not valid UTF-8: {e}") from e

    pairs: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidParameterError(f"edge list line {line_no}: expected 'u v', got {raw!r}")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError as e:
            raise InvalidParameterError(
                f"edge list line {line_no}: vertices must be integers, got {raw!r}"
            ) from e
    return pairs


def parse_q_list(text: str) -> list[int]:
    """Parse a comma-separated list of separations such as '1,2,3'."""
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            q = int(token)
        except ValueError as e:
            raise InvalidParameterError(f"separation must be an integer, got {token!r}") from e
        if q < 1:
            raise InvalidParameterError(f"separation must be at least 1, got {q}")
        values.append(q)
    if not values:
        raise InvalidParameterError("at least one separation is required")
    return values
