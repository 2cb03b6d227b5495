"""Sol Sapphire - Main Entry Point

Runs the command line interface from a source checkout.

Usage:
    # Canonical form of a gluing matrix
    python main.py canon "2 1; 1 1"

    # All double covers, as a table or as JSON
    python main.py covers "1 2; 1 3"
    python main.py covers "1 1; 1 2" --format json

    # Free involutions and the Borsuk-Ulam property
    python main.py involutions "5 4; 6 5"
    python main.py bu "1 1; 2 3" -n 3

    # Homeomorphism test and first homology
    python main.py homeo "1 1; 1 2" "2 1; 1 1"
    python main.py h1 "1 1; 1 2"

    # Atlas of all canonical sapphires with entries up to 4
    python main.py atlas --max-entry 4 --check --out atlas.json
"""
import sys

from src.sol_sapphire.main import main

if __name__ == '__main__':
    sys.exit(main())
