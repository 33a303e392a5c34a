"""Entry point for ``python -m pilegame``."""

from .cli import main

main()
