"""Verification engine for fat-point linear systems in projective 3-space."""

__version__ = "0.1.0"
