"""Exact and multiprecision series for the first Painleve equation."""

__version__ = "1.0.0"
