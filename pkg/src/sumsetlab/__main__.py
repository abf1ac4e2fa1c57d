"""``python3 -m sumsetlab`` runs the command-line interface."""

from .cli import main

main()
