"""Exact verification of quasitriangular multiplier Hopf algebra examples."""

__version__ = "0.1.0"
