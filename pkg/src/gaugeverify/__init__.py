"""Exact verification of ideal-theoretic and combinatorial identities for
local models of two-dimensional Galois deformation rings."""

__version__ = "0.1.0"
