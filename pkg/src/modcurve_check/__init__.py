"""Exact-arithmetic checks of bielliptic models, torsion and quadratic points on X1(13) and X0(37)."""

__version__ = "0.1.0"
