#!/usr/bin/env python3
"""
lattice-covers - command-line entry point
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.presentation.cli import main


if __name__ == "__main__":
    main()
