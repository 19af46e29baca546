"""Cantor-set retraction toolkit - Main Package."""

__version__ = "0.1.0"
