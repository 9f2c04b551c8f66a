"""
Reidemeister Toolkit

Twisted conjugacy invariants of group automorphisms in exact arithmetic:
Reidemeister numbers, the twisted Burnside-Frobenius check, separability
certificates, Möbius congruences and dynamical zeta functions.
"""

__version__ = "1.0.0"
__author__ = "Reidemeister Toolkit Team"

__all__ = [
    "groups",
    "lattice",
    "dual",
    "zeta",
    "separability",
    "cli",
]
