"""Exact computation of braided centers and centralizers for small quantum groups."""

__version__ = "0.1.0"
