"""Finite residuated lattices, coupled semirings and tied semirings as operation tables."""

__version__ = "0.1.0"
