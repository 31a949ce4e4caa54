#!/usr/bin/env python3
"""Entry point when running from a source checkout."""
import sys

from abeltqft.main import main

if __name__ == "__main__":
    sys.exit(main())
