"""Exact computations with Witt vectors, zero-cycles on the line and cycles with modulus."""

__version__ = "0.1.0"
