#!/usr/bin/env python3
"""
Script to run the extreme-mixture command line.
"""
import sys

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from extreme_mixture.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
