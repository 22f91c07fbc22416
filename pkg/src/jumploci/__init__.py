"""Exact computation of cohomology jump loci and of the Dwyer-Fried and
Σ-invariant bounds they control."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
