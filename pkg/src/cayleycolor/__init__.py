"""Finite groups, (semi)minimal Cayley graphs and their colorings."""

__version__ = "0.1.0"
