"""Exact toolkit for Hilbert functions of Artinian Gorenstein algebras."""

__version__ = "0.1.0"
