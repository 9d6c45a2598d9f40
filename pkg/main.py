"""Main entry point for the bbt command line."""

from src.bbtree.cli.commands import main

if __name__ == "__main__":
    main()
