"""
Acceptance sweeps over the standard group list and random lattice automorphisms
Runs the twisted Burnside-Frobenius, semidirect bijection and congruence checks
"""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

import numpy as np
from pydantic import BaseModel

from reidemeister.cli.loaders import load_group
from reidemeister.dual.characters import central_characters
from reidemeister.dual.tbft import verify_tbft
from reidemeister.groups.automorphisms import enumerate_automorphisms
from reidemeister.groups.finite_group import (
    CyclicSpec,
    DihedralSpec,
    FiniteGroup,
    GroupSpec,
    ProductSpec,
    SymmetricSpec,
    build_group,
)
from reidemeister.groups.twisted import finite_reidemeister_sequence
from reidemeister.lattice.matrices import random_unimodular
from reidemeister.lattice.reidemeister import reidemeister_sequence
from reidemeister.separability.semidirect import verify_semidirect_bijection
from reidemeister.shared.config.paths import QUATERNION8_FILE
from reidemeister.shared.errors import InputError
from reidemeister.shared.logging import get_logger
from reidemeister.shared.utils.error_logger import log_full_error
from reidemeister.zeta.congruences import congruence_audit

logger = get_logger(__name__)

SEMIDIRECT_ORDER_LIMIT = 2000
FINITE_CONGRUENCE_LENGTH = 8
LATTICE_CONGRUENCE_LENGTH = 12
LATTICE_SAMPLES = 50
LATTICE_SEED = 20240601


class GroupSweepResult(BaseModel):
    group: str
    order: int
    automorphisms: int = 0
    tbft_failures: int = 0
    invariant_class_mismatches: int = 0
    semidirect_checked: int = 0
    semidirect_failures: int = 0
    congruence_failures: int = 0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and not (
            self.tbft_failures or self.invariant_class_mismatches
            or self.semidirect_failures or self.congruence_failures
        )


class LatticeSweepResult(BaseModel):
    matrices: int
    congruence_failures: int
    skipped_terms: int
    failing_matrices: List[List[List[int]]] = []

    @property
    def passed(self) -> bool:
        return self.congruence_failures == 0


class SweepSummary(BaseModel):
    groups: List[GroupSweepResult]
    lattice: Optional[LatticeSweepResult] = None
    pairs: int

    @property
    def passed(self) -> bool:
        return all(g.passed for g in self.groups) and (self.lattice is None or self.lattice.passed)


def standard_group_names(quick: bool = False) -> List[str]:
    """The acceptance group list; quick keeps groups of order <= 12"""
    names = [f"cyclic({n})" for n in range(1, 31)]
    names += [f"dihedral({n})" for n in range(3, 13)]
    names += ["symmetric(3)", "symmetric(4)", "quaternion8"]
    names += [f"cyclic({a}) x cyclic({b})" for a in range(2, 9) for b in range(a, 9)]
    if quick:
        names = [name for name in names if build_standard_group(name).order <= 12]
    return names


def _standard_spec(name: str) -> GroupSpec:
    if " x " in name:
        left, right = name.split(" x ")
        return ProductSpec(_standard_spec(left), _standard_spec(right))
    kind, _, arg = name.partition("(")
    specs = {"cyclic": CyclicSpec, "dihedral": DihedralSpec, "symmetric": SymmetricSpec}
    if kind not in specs or not arg.endswith(")"):
        raise InputError(f"unknown standard group {name!r}")
    return specs[kind](int(arg[:-1]))


def build_standard_group(name: str) -> FiniteGroup:
    if name == "quaternion8":
        return load_group(QUATERNION8_FILE)
    return build_group(_standard_spec(name))


def sweep_group(name: str) -> GroupSweepResult:
    """Every automorphism of one group through all three finite checks"""
    G = build_standard_group(name)
    result = GroupSweepResult(group=name, order=G.order)
    try:
        automorphisms = enumerate_automorphisms(G)
        table = central_characters(G)
        result.automorphisms = len(automorphisms)
        for phi in automorphisms:
            report = verify_tbft(G, phi, table=table)
            result.tbft_failures += not report.passed
            result.invariant_class_mismatches += not report.invariant_classes_agree

            m = phi.order()
            if G.order * m <= SEMIDIRECT_ORDER_LIMIT:
                result.semidirect_checked += 1
                result.semidirect_failures += not verify_semidirect_bijection(G, phi, m).passed

            sequence = finite_reidemeister_sequence(G, phi, FINITE_CONGRUENCE_LENGTH)
            result.congruence_failures += not congruence_audit(sequence).passed
        logger.info("✅ group sweep completed", group=name, automorphisms=result.automorphisms,
                    passed=result.passed)
    except Exception as e:
        log_full_error(e, {"group": name, "operation": "sweep_group"})
        result.error = f"{type(e).__name__}: {e}"
    return result


def sweep_lattices(samples: int = LATTICE_SAMPLES, seed: int = LATTICE_SEED) -> LatticeSweepResult:
    """Congruences of R(M^n), n <= 12, for random unimodular M in dimensions 2 and 3"""
    rng = np.random.default_rng(seed)
    failures, skipped, failing = 0, 0, []
    for i in range(samples):
        M = random_unimodular(2 + i % 2, rng, bound=5)
        audit = congruence_audit(reidemeister_sequence(M, LATTICE_CONGRUENCE_LENGTH))
        skipped += len(audit.skipped)
        if not audit.passed:
            failures += 1
            failing.append(M.to_list())
    logger.info("✅ lattice sweep completed", matrices=samples, failures=failures)
    return LatticeSweepResult(matrices=samples, congruence_failures=failures, skipped_terms=skipped,
                              failing_matrices=failing)


def run_sweeps(workers: int = 1, quick: bool = False, include_lattice: bool = True) -> SweepSummary:
    """Results come back in group-list order whatever the worker count"""
    names = standard_group_names(quick)
    logger.info("🔍 starting sweep", groups=len(names), workers=workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = list(pool.map(sweep_group, names))
    else:
        groups = [sweep_group(name) for name in names]
    lattice = sweep_lattices(samples=10 if quick else LATTICE_SAMPLES) if include_lattice else None
    return SweepSummary(groups=groups, lattice=lattice, pairs=sum(g.automorphisms for g in groups))
