"""Exact audit of the finite case analysis behind Chisini's conjecture for generic projections."""

__version__ = "0.1.0"
