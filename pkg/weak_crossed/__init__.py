"""Exact verification of crossed products by weak Hopf algebras."""

__version__ = "0.1.0"
