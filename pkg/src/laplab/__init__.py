"""Laplacian eigenvalue distribution toolkit for small graphs."""

__version__ = "0.1.0"
