"""Flip graphs of pseudoline and pseudocircle arrangements."""

__version__ = "0.1.0"
