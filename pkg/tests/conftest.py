"""Pytest bootstrap: makes the sibling helper modules (support, oracles)
importable when the suite runs from the repository root."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
