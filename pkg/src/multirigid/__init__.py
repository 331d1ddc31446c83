"""Schubert classes on type A and orthogonal flag varieties: indices, Weyl
windows, pushforwards and fibers, and multi-rigidity verdicts."""

__version__ = "0.1.0"
