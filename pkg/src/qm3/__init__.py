"""Exact computer algebra for the reduced quantum plane M_3(C) at a cube root of unity."""

__version__ = "0.1.0"
