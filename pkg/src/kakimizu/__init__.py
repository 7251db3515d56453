"""Kakimizu complexes of a family of 2-bridge knots."""
__version__ = "0.1.0"
