"""Exact and numerical verification of stochastic duality built from Lie
algebra representations: interacting particle systems and diffusions on one
side, orthogonal-polynomial duality kernels on the other."""

__version__ = "0.1.0"
