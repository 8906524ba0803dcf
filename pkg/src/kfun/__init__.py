"""Exact symbolic constructions of the K-theoretic P/Q function families."""

__version__ = "0.1.0"
