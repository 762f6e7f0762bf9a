"""Exact contiguity relations for the finite families of the (q-)Askey scheme."""

__version__ = "0.1.0"
