"""Exact computer algebra for quantum super immanants."""

__version__ = "0.1.0"
