"""Exact invariants for contractible 4-manifolds built from gleamed shadows."""

__version__ = "1.0.0"
