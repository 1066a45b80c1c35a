"""Entropic uncertainty relations for one-dimensional quantum systems."""

__version__ = "0.1.0"
