"""tests package init."""

__all__ = []
