"""Certified constructions of bipartite graph states whose Schmidt measure reaches floor(n/2)."""

__version__ = "0.1.0"
