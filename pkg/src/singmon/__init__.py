"""Singular Artin monoids, their desingularization maps and diagram monoid targets."""

__version__ = "0.1.0"
