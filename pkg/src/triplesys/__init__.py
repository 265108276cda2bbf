"""Exact computations for Lie triple systems and 2-term homotopy Lie triple systems."""

__version__ = "0.1.0"
