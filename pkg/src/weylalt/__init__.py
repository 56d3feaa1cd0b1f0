"""Exact Weyl alternation sets and q-weight multiplicities for classical Lie algebras."""

__version__ = "0.1.0"
