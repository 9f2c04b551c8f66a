"""
Single entry point for the twisted conjugacy problem on the supported group kinds.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from pydantic import BaseModel

from reidemeister.groups.automorphisms import Automorphism
from reidemeister.groups.finite_group import FiniteGroup
from reidemeister.groups.twisted import twisted_decide_finite
from reidemeister.lattice.matrices import IntMatrix
from reidemeister.lattice.reidemeister import lattice_twisted_decide
from reidemeister.separability.quotients import SeparationWitness, lattice_separation_search
from reidemeister.shared.errors import UnsupportedInstanceError


@dataclass(frozen=True)
class FiniteInstance:
    group: FiniteGroup
    automorphism: Automorphism
    x: int
    y: int


@dataclass(frozen=True)
class LatticeInstance:
    matrix: IntMatrix
    x: Sequence[int]
    y: Sequence[int]
    separate: bool = True
    k_max: Optional[int] = None


Instance = Union[FiniteInstance, LatticeInstance]


class DehnDecision(BaseModel):
    kind: str
    equivalent: bool
    witness: Optional[Union[int, List[int]]] = None
    separation: Optional[SeparationWitness] = None
    separation_status: Optional[str] = None


def twisted_dehn_decide(instance: Instance) -> DehnDecision:
    if isinstance(instance, FiniteInstance):
        decision = twisted_decide_finite(instance.group, instance.automorphism, instance.x, instance.y)
        return DehnDecision(kind="finite", equivalent=decision.equivalent, witness=decision.witness)

    if isinstance(instance, LatticeInstance):
        decision = lattice_twisted_decide(instance.matrix, instance.x, instance.y)
        if decision.equivalent:
            return DehnDecision(kind="lattice", equivalent=True, witness=list(decision.witness))
        if not instance.separate:
            return DehnDecision(kind="lattice", equivalent=False)
        result = lattice_separation_search(instance.matrix, instance.x, instance.y, instance.k_max)
        return DehnDecision(kind="lattice", equivalent=False, separation=result.witness,
                            separation_status=result.status)

    raise UnsupportedInstanceError(f"unsupported instance kind: {type(instance).__name__}")
