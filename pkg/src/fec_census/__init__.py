"""Exact counts of full exceptional collections on orbifold projective lines and Dynkin quivers."""

__version__ = "0.1.0"
