"""Exact computations with finite-dimensional quasi-triangular weak Hopf algebras."""

__version__ = "0.1.0"
