"""Frattini subgroups, prime graphs and non-Frattini element structure of
finite permutation groups."""

__version__ = "0.1.0"
