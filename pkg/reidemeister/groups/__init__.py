"""
Finite groups, automorphisms and twisted conjugacy classes
"""

from .automorphisms import (
    Automorphism,
    automorphism_from_images,
    enumerate_automorphisms,
    identity_automorphism,
    inner_automorphism,
)
from .finite_group import FiniteGroup, build_group, cyclic, dihedral, direct_product, from_table, symmetric
from .twisted import (
    TwistedPartition,
    conjugacy_classes,
    invariant_class_count,
    reidemeister_number_finite,
    semidirect_with_cyclic,
    twisted_classes,
    twisted_decide_finite,
)
