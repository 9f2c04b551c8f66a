"""
Twisted conjugacy for automorphisms of Z^n
"""

from .matrices import IntMatrix, char_poly
from .reidemeister import lattice_reidemeister, lattice_twisted_decide, reidemeister_sequence
from .sequence import INFINITE, ReidemeisterSequence
from .smith import SmithForm, smith_normal_form
