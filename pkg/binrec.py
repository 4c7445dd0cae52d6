"""
Binrec - Main Entry Point

Runs the binrec command line from a source checkout:

    python binrec.py compute --x 1 --n 7
    python binrec.py verify --output json

Environment variables (BINREC_CAP, BINREC_SEED, BINREC_LOG_LEVEL, ...) may
be placed in a local .env file.
"""

import os
import sys

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Load environment variables before settings are read
from dotenv import load_dotenv
load_dotenv()

from cli import main  # noqa: E402


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
