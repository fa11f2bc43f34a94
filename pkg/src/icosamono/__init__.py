"""Exact reconstruction of the E-part monodromy of the Winger pencil."""

__version__ = "0.1.0"
