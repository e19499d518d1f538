"""Exact toolkit for Seifert-matrix invariants, signature functions, Blanchfield forms and obstruction certificates."""

__version__ = "0.1.0"
