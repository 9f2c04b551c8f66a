"""
Finite quotients (Z/k)^n that separate twisted classes of lattice automorphisms.

Reduction mod k commutes with M, so every k gives a φ-compatible quotient. The
RP certificate takes k = |det(I - M)|: then k·Z^n ⊆ (I - M)Z^n, and twisted
classes of Z^n are exactly the preimages of twisted classes of (Z/k)^n.
"""

from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from reidemeister.groups.automorphisms import Automorphism
from reidemeister.groups.finite_group import FiniteGroup, direct_product_of_cyclics
from reidemeister.groups.twisted import twisted_classes, twisted_decide_finite
from reidemeister.lattice.matrices import IntMatrix, check_vector
from reidemeister.lattice.reidemeister import lattice_twisted_decide, solvable_mod
from reidemeister.lattice.smith import SmithForm, smith_normal_form
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InputError, VerificationError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)

DEFAULT_SEARCH_BOUND = 64
PAIRWISE_CHECK_LIMIT = 64


# ----------------------------------------------------------------------------
# The finite group (Z/k)^n with the reduced automorphism
# ----------------------------------------------------------------------------

def _radix(k: int, n: int) -> np.ndarray:
    return k ** np.arange(n - 1, -1, -1, dtype=np.int64)


def vector_index(v: Sequence[int], k: int) -> int:
    """Mixed-radix index of v mod k in direct_product_of_cyclics([k] * n)"""
    return int(np.dot(np.array([x % k for x in v], dtype=np.int64), _radix(k, len(v))))


def reduced_quotient(M: IntMatrix, k: int) -> Tuple[FiniteGroup, Automorphism]:
    """K = (Z/k)^n and φ_K = M mod k as a permutation of K"""
    n = M.n
    K = direct_product_of_cyclics([k] * n)
    vectors = np.array(list(product(range(k), repeat=n)), dtype=np.int64)
    images = (vectors @ M.mod(k).to_numpy().T) % k
    phi_k = Automorphism(K, images @ _radix(k, n), label=f"M mod {k}")
    return K, phi_k


# ----------------------------------------------------------------------------
# Separation search
# ----------------------------------------------------------------------------

class SeparationWitness(BaseModel):
    modulus: int
    x_image: List[int]
    y_image: List[int]
    reduced_matrix: List[List[int]]
    verification: str  # finite-orbit | smith-mod-k


class SeparationResult(BaseModel):
    status: str  # separated | not-found | not-applicable
    witness: Optional[SeparationWitness] = None
    equivalence_witness: Optional[List[int]] = None
    searched_up_to: Optional[int] = None


def _verify_separation(M: IntMatrix, x: Sequence[int], y: Sequence[int], k: int) -> str:
    if k ** M.n > settings.finite_verification_cap:
        return "smith-mod-k"
    K, phi_k = reduced_quotient(M, k)
    decision = twisted_decide_finite(K, phi_k, vector_index(x, k), vector_index(y, k))
    if decision.equivalent:
        raise VerificationError(f"images of {x} and {y} are twisted conjugate mod {k}")
    return "finite-orbit"


def default_search_bound(M: IntMatrix) -> int:
    d = abs(M.one_minus().det())
    return max(d, 2) if d else DEFAULT_SEARCH_BOUND


def lattice_separation_search(M: IntMatrix, x: Sequence[int], y: Sequence[int],
                              k_max: Optional[int] = None) -> SeparationResult:
    """Smallest k <= k_max whose quotient (Z/k)^n separates the classes of x and y"""
    M.require_unimodular()
    x = check_vector(x, M.n)
    y = check_vector(y, M.n)
    smith = smith_normal_form(M.one_minus())
    decision = lattice_twisted_decide(M, x, y, smith=smith)
    if decision.equivalent:
        return SeparationResult(status="not-applicable", equivalence_witness=list(decision.witness))

    k_max = default_search_bound(M) if k_max is None else k_max
    delta = [b - a for a, b in zip(x, y)]
    for k in range(2, k_max + 1):
        if solvable_mod(smith, delta, k):
            continue
        method = _verify_separation(M, x, y, k)
        witness = SeparationWitness(
            modulus=k,
            x_image=[a % k for a in x],
            y_image=[b % k for b in y],
            reduced_matrix=M.mod(k).to_list(),
            verification=method,
        )
        logger.debug("separating quotient found", k=k, method=method)
        return SeparationResult(status="separated", witness=witness, searched_up_to=k)
    return SeparationResult(status="not-found", searched_up_to=k_max)


# ----------------------------------------------------------------------------
# RP certificates
# ----------------------------------------------------------------------------

class RPCertificate(BaseModel):
    status: str  # certified | infinite
    reidemeister_number: str
    modulus: Optional[int] = None
    reduced_matrix: Optional[List[List[int]]] = None
    cofactor: Optional[List[List[int]]] = None
    class_representatives: List[List[int]] = []
    transcript: List[str] = []


def _inverse_unimodular(U: IntMatrix) -> IntMatrix:
    return U.adjugate().scale(U.det())


def _class_keys(smith: SmithForm, reps: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Coordinates of each representative in ⊕ Z/d_i"""
    return [tuple(b % d for b, d in zip(smith.U.apply(r), smith.diagonal)) for r in reps]


def check_class_representatives(M: IntMatrix, reps: Sequence[Sequence[int]], k: int) -> str:
    """
    Check that reps fall into k distinct twisted classes of (Z/k)^n.

    Small quotients are labelled by the orbit partition of φ_K. Otherwise pairs
    are tested with solvable_mod, and past PAIRWISE_CHECK_LIMIT by cokernel
    coordinates. Returns the method used; raises VerificationError on a collision.
    """
    reps = [check_vector(r, M.n) for r in reps]
    if len(reps) != k:
        raise VerificationError(f"(c) expected {k} representatives, got {len(reps)}")
    if k ** M.n <= settings.finite_verification_cap:
        K, phi_k = reduced_quotient(M, k)
        partition = twisted_classes(K, phi_k)
        if partition.class_count != k:
            raise VerificationError(f"(c) R(phi_K) = {partition.class_count}, expected {k}")
        labels = {int(partition.class_of[vector_index(r, k)]) for r in reps}
        method = "finite-orbit"
    elif k <= PAIRWISE_CHECK_LIMIT:
        smith = smith_normal_form(M.one_minus())
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                if solvable_mod(smith, [q - p for p, q in zip(a, b)], k):
                    raise VerificationError(f"(c) representatives {a} and {b} share a class mod {k}")
        labels = set(range(k))
        method = "smith-mod-k"
    else:
        labels = set(_class_keys(smith_normal_form(M.one_minus()), reps))
        method = "cokernel-coordinates"
    if len(labels) != k:
        raise VerificationError("(c) representatives collide in (Z/k)^n")
    return method


def rp_certificate(M: IntMatrix) -> RPCertificate:
    M.require_unimodular()
    A = M.one_minus()
    d = A.det()
    if d == 0:
        return RPCertificate(status="infinite", reidemeister_number="inf",
                             transcript=["det(I - M) = 0: R(phi) is infinite, no certificate required"])
    k = abs(d)
    transcript = [f"k = |det(I - M)| = {k}"]

    # (a) F∘M = M_K∘F on the standard generators
    reduced = M.mod(k)
    for i in range(M.n):
        e = [int(i == j) for j in range(M.n)]
        if [v % k for v in M.apply(e)] != [v % k for v in reduced.apply(e)]:
            raise VerificationError(f"reduction mod {k} does not commute with M on e_{i}")
    transcript.append("(a) reduction mod k commutes with M on every generator")

    # (b) B = k·(I - M)^-1 is integral, so k·Z^n lies in (I - M)Z^n
    B = A.adjugate().scale(1 if d > 0 else -1)
    if A @ B != IntMatrix.identity(M.n).scale(k):
        raise VerificationError("cofactor matrix does not satisfy (I - M)B = kI")
    transcript.append("(b) (I - M)B = kI with B = sign(det)·adj(I - M)")

    # (c) one representative per class of Z^n, pairwise separated in (Z/k)^n
    smith = smith_normal_form(A)
    U_inv = _inverse_unimodular(smith.U)
    reps = [list(U_inv.apply(c)) for c in product(*(range(di) for di in smith.diagonal))]
    method = check_class_representatives(M, reps, k)
    transcript.append(f"(c) {k} representatives have distinct images in the twisted classes of (Z/k)^n ({method})")

    logger.debug("RP certificate built", k=k, n=M.n)
    return RPCertificate(
        status="certified",
        reidemeister_number=str(k),
        modulus=k,
        reduced_matrix=reduced.to_list(),
        cofactor=B.to_list(),
        class_representatives=reps,
        transcript=transcript,
    )


def verify_rp_certificate(M: IntMatrix, certificate: RPCertificate) -> bool:
    """Recheck conditions (a)-(c) from the certificate data alone; raises on failure"""
    A = M.one_minus()
    d = A.det()
    if certificate.status == "infinite":
        if d != 0:
            raise VerificationError("certificate claims infinite R but det(I - M) is nonzero")
        return True
    k = certificate.modulus
    if k is None or k != abs(d):
        raise InputError(f"certificate modulus {k} does not equal |det(I - M)| = {abs(d)}")

    if IntMatrix.from_rows(certificate.reduced_matrix) != M.mod(k):
        raise VerificationError("(a) reduced matrix is not M mod k")

    if A @ IntMatrix.from_rows(certificate.cofactor) != IntMatrix.identity(M.n).scale(k):
        raise VerificationError("(b) (I - M)B != kI")

    check_class_representatives(M, certificate.class_representatives, k)
    return True
