"""Planar knot diagrams, annulus-twist families, patterns, and invariants."""

__version__ = "0.1.0"
