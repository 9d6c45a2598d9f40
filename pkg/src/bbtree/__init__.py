"""bbtree - spanning-tree backbone colorings with optimal color separation."""

__version__ = "0.1.0"
