"""Exact machinery for Mordell-Weil lattices of y^2 = x^3 + t^m + 1."""

__version__ = "0.1.0"
