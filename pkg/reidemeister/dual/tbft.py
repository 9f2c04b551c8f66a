"""
Fixed points of the dual action ρ -> ρ∘φ and the twisted Burnside-Frobenius check.

φ permutes the ordinary classes by σ (φ(C_j) = C_σ(j)); the pullback of an
irreducible with central character ω has central character j -> ω(C_σ(j)).
A dual point is fixed exactly when its row is σ-invariant.
"""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

from reidemeister.dual.characters import CentralCharacterTable, central_characters
from reidemeister.groups.automorphisms import Automorphism
from reidemeister.groups.finite_group import FiniteGroup
from reidemeister.groups.twisted import class_permutation, reidemeister_number_finite
from reidemeister.shared.errors import InputError, VerificationError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


class TBFTReport(BaseModel):
    group: str
    automorphism: str
    group_order: int
    reidemeister_number: int = Field(..., alias="R")
    fixed_dual_points: int = Field(..., alias="S_f")
    invariant_classes: int
    prime: int
    seed: int
    verdict: str = Field(..., description="'pass' iff R == S_f")
    invariant_classes_agree: bool

    model_config = {"populate_by_name": True}

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _sigma(G: FiniteGroup, phi: Automorphism, table: CentralCharacterTable) -> np.ndarray:
    if table.group is not G or phi.group is not G:
        raise InputError("character table, automorphism and group do not match")
    sigma = class_permutation(G, phi, table.class_data.partition)
    sizes = np.array(table.class_data.class_sizes)
    if not np.array_equal(sizes, sizes[sigma]):
        raise VerificationError("automorphism does not preserve class sizes")
    return sigma


def fixed_dual_count(G: FiniteGroup, phi: Automorphism, table: CentralCharacterTable) -> int:
    """S_f(φ): rows ω with ω(C_j) = ω(C_σ(j)) for every class j"""
    sigma = _sigma(G, phi, table)
    rows = np.array(table.rows, dtype=np.int64)
    return int(np.count_nonzero((rows == rows[:, sigma]).all(axis=1)))


def dual_permutation(G: FiniteGroup, phi: Automorphism, table: CentralCharacterTable) -> np.ndarray:
    """τ with row τ(i) = row i composed with σ"""
    sigma = _sigma(G, phi, table)
    index = table.row_index()
    tau = []
    for row in table.rows:
        pulled = tuple(row[int(s)] for s in sigma)
        if pulled not in index:
            raise VerificationError(f"pullback {pulled} is not a central character row")
        tau.append(index[pulled])
    return np.array(tau, dtype=np.int64)


def cycle_type(perm: np.ndarray) -> List[int]:
    """Sorted cycle lengths of a permutation of 0..len-1"""
    seen = np.zeros(len(perm), dtype=bool)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = int(perm[i])
            length += 1
        lengths.append(length)
    return sorted(lengths)


def verify_tbft(G: FiniteGroup, phi: Automorphism, table: Optional[CentralCharacterTable] = None,
                prime: Optional[int] = None) -> TBFTReport:
    """R(φ) against S_f(φ), with the count of φ-invariant classes as a cross-check"""
    table = central_characters(G, prime=prime) if table is None else table
    R = reidemeister_number_finite(G, phi)
    S_f = fixed_dual_count(G, phi, table)
    sigma = _sigma(G, phi, table)
    invariant = int(np.count_nonzero(sigma == np.arange(len(sigma))))
    report = TBFTReport(
        group=G.label,
        automorphism=phi.label,
        group_order=G.order,
        R=R,
        S_f=S_f,
        invariant_classes=invariant,
        prime=table.prime,
        seed=table.seed,
        verdict="pass" if R == S_f else "fail",
        invariant_classes_agree=(invariant == R == S_f),
    )
    if not report.passed:
        logger.warning("⚠️ twisted Burnside-Frobenius mismatch", group=G.label, automorphism=phi.label, R=R, S_f=S_f)
    return report
