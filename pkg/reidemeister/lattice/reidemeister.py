"""
Twisted conjugacy for automorphisms of Z^n.

For M in GL(n, Z) the twisted class of x is the coset x + (I - M)Z^n, so the
Reidemeister number is the index of the image lattice: |det(I - M)| when that is
nonzero and infinite otherwise. Decisions go through the Smith form of I - M.
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple

from reidemeister.lattice.matrices import IntMatrix, check_vector
from reidemeister.lattice.sequence import INFINITE, ReidemeisterSequence, Term
from reidemeister.lattice.smith import SmithForm, smith_normal_form
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InputError, VerificationError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LatticeDecision:
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    equivalent: bool
    witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class Cokernel:
    """Z^n / (I - M)Z^n as invariant factors d > 1 plus a free rank"""

    torsion: Tuple[int, ...]
    free_rank: int

    @property
    def order(self) -> Term:
        if self.free_rank:
            return INFINITE
        return reduce(lambda a, b: a * b, self.torsion, 1)


def lattice_reidemeister(M: IntMatrix) -> Term:
    M.require_unimodular()
    d = M.one_minus().det()
    return abs(d) if d else INFINITE


def reidemeister_cokernel(M: IntMatrix) -> Cokernel:
    """Coset-count oracle: the group of twisted classes as an abelian group"""
    M.require_unimodular()
    diagonal = smith_normal_form(M.one_minus()).diagonal
    return Cokernel(tuple(d for d in diagonal if d > 1), sum(1 for d in diagonal if d == 0))


def lattice_twisted_decide(M: IntMatrix, x: Sequence[int], y: Sequence[int],
                           smith: Optional[SmithForm] = None) -> LatticeDecision:
    """
    y ~ x iff y - x lies in (I - M)Z^n.

    With U(I - M)V = D and b = U(y - x), the system is solvable iff d_i | b_i for
    every i (b_i = 0 where d_i = 0); then g = V·c with c_i = b_i / d_i.
    """
    M.require_unimodular()
    x = check_vector(x, M.n)
    y = check_vector(y, M.n)
    A = M.one_minus()
    smith = smith_normal_form(A) if smith is None else smith
    delta = tuple(b - a for a, b in zip(x, y))
    rhs = smith.U.apply(delta)

    c = []
    for d, b in zip(smith.diagonal, rhs):
        if d == 0:
            if b != 0:
                return LatticeDecision(x, y, False)
            c.append(0)
        elif b % d:
            return LatticeDecision(x, y, False)
        else:
            c.append(b // d)

    g = smith.V.apply(c)
    if A.apply(g) != delta:
        raise VerificationError(f"witness {g} does not satisfy (I - M)g = y - x")
    return LatticeDecision(x, y, True, g)


def solvable_mod(smith: SmithForm, delta: Sequence[int], k: int) -> bool:
    """
    Whether (I - M)g = delta has a solution in (Z/k)^n.

    U and V stay invertible mod k, so this is d_i c_i = b_i (mod k) coordinatewise:
    solvable iff gcd(d_i, k) divides b_i.
    """
    rhs = smith.U.apply(delta)
    return all(b % math.gcd(d, k) == 0 for d, b in zip(smith.diagonal, rhs))


def reidemeister_sequence(M: IntMatrix, length: int) -> ReidemeisterSequence:
    """R(φ^k) for k = 1..length, powers by exact repeated multiplication"""
    M.require_unimodular()
    if not 0 <= length <= settings.sequence_cap:
        raise InputError(f"sequence length must lie in 0..{settings.sequence_cap}, got {length}")
    terms = []
    power = IntMatrix.identity(M.n)
    for _ in range(length):
        power = power @ M
        d = power.one_minus().det()
        terms.append(abs(d) if d else INFINITE)
    logger.debug("lattice sequence computed", n=M.n, length=length)
    return ReidemeisterSequence(tuple(terms), source=f"matrix {M}")
