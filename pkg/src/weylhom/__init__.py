"""Exact Hom-rank computations for global Weyl modules of generalized loop algebras."""

__version__ = "0.1.0"
