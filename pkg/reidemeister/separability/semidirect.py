"""
Twisted classes of G against ordinary classes of G ⋊_φ Z_m on the coset G·t.

Conjugating (g, 1) by (h, 0) gives (h·g·φ(h)^-1, 1), so every twisted class lands
inside one class of the coset. This module checks that no conjugation by mixed
elements merges two twisted classes.
"""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from reidemeister.groups.automorphisms import Automorphism, generating_set, identity_automorphism
from reidemeister.groups.finite_group import FiniteGroup
from reidemeister.groups.twisted import semidirect_with_cyclic, twisted_classes
from reidemeister.shared.errors import InvalidAutomorphismError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


class SemidirectBijectionReport(BaseModel):
    group: str
    automorphism: str
    m: int
    product_order: int
    twisted_class_count: int
    coset_class_count: int
    consistent_membership: bool
    twisted_partition: List[List[int]]
    coset_partition: List[List[int]]
    verdict: str

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _partition_lists(labels: np.ndarray) -> List[List[int]]:
    blocks = {}
    for g, label in enumerate(labels.tolist()):
        blocks.setdefault(label, []).append(g)
    return sorted(blocks.values())


def verify_semidirect_bijection(G: FiniteGroup, phi: Automorphism, m: Optional[int] = None,
                                cap: Optional[int] = None) -> SemidirectBijectionReport:
    m = phi.order() if m is None else m
    if m < 1:
        raise InvalidAutomorphismError(f"cyclic factor order must be >= 1, got {m}")
    gamma = semidirect_with_cyclic(G, phi, m, cap=cap)
    n = G.order

    # G sits in coset 0; t = (e, 1) generates the cyclic factor
    gens = generating_set(G)
    if m > 1:
        gens = gens + [n]
    gamma_classes = twisted_classes(gamma, identity_automorphism(gamma), generators=gens)
    twisted = twisted_classes(G, phi)

    coset = (1 % m) * n + np.arange(n)
    coset_labels = gamma_classes.class_of[coset]
    pairs = set(zip(twisted.class_of.tolist(), coset_labels.tolist()))
    coset_count = len(set(coset_labels.tolist()))
    consistent = len(pairs) == twisted.class_count == coset_count

    report = SemidirectBijectionReport(
        group=G.label,
        automorphism=phi.label,
        m=m,
        product_order=gamma.order,
        twisted_class_count=twisted.class_count,
        coset_class_count=coset_count,
        consistent_membership=consistent,
        twisted_partition=twisted.classes(),
        coset_partition=_partition_lists(coset_labels),
        verdict="pass" if consistent else "fail",
    )
    if not consistent:
        logger.warning("⚠️ semidirect class bijection fails", group=G.label, automorphism=phi.label, m=m)
    return report
