"""
Central characters of finite groups over a prime field.

The class sums span a commutative algebra; its simultaneous eigenvectors are the
central characters ω(C) of the irreducible representations. Over GF(p) with
p ≡ 1 (mod exp G) the algebra splits, and central characters separate the
irreducibles, so this table is enough to count fixed points of the dual action
without lifting characters to characteristic zero.
"""

import hashlib
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from sympy import GF, Poly, Symbol, isprime
from sympy.polys.matrices import DomainMatrix

from reidemeister.groups.finite_group import FiniteGroup
from reidemeister.groups.twisted import TwistedPartition, conjugacy_classes
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import CharacterTableError, PrimeSelectionError, SizeCapError, VerificationError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ClassData:
    """Ordinary classes of G with their structure constants"""

    group: FiniteGroup
    partition: TwistedPartition
    class_sizes: Tuple[int, ...]
    inverse_class: Tuple[int, ...]
    # a[i, j, k] = #{(u, v) in C_i x C_j : u·v = rep_k}
    structure_constants: np.ndarray

    @property
    def class_count(self) -> int:
        return self.partition.class_count

    @property
    def classes(self) -> List[List[int]]:
        return self.partition.classes()

    def class_matrix(self, i: int) -> np.ndarray:
        """M_i[j][k] = a[i][j][k]"""
        return self.structure_constants[i]


def _structure_constants(G: FiniteGroup, class_of: np.ndarray, targets: np.ndarray, r: int) -> np.ndarray:
    a = np.zeros((r, r, r), dtype=np.int32)
    elements = np.arange(G.order)
    for k, target in enumerate(targets):
        # v = u^-1 · target ranges over the partners of every u
        partners = G.table[G.inverses[elements], int(target)]
        np.add.at(a[:, :, k], (class_of[elements], class_of[partners]), 1)
    return a


def class_data(G: FiniteGroup, cap: Optional[int] = None) -> ClassData:
    cap = settings.dual_cap if cap is None else cap
    if G.order > cap:
        raise SizeCapError(f"class algebra computation is capped at order {cap}, got {G.order}")
    partition = conjugacy_classes(G)
    class_of = partition.class_of.astype(np.int64)
    reps = partition.representatives
    r = partition.class_count

    sizes = tuple(int(s) for s in np.bincount(class_of, minlength=r))
    inverse_class = tuple(int(class_of[G.inverses[int(rep)]]) for rep in reps)
    a = _structure_constants(G, class_of, reps, r)

    # spot check: the largest member of each class gives the same constants
    alternates = np.array([int(partition.members(k)[-1]) for k in range(r)])
    if not np.array_equal(a, _structure_constants(G, class_of, alternates, r)):
        raise VerificationError("structure constants depend on the class representative")

    rng = np.random.default_rng(G.order)
    c1, c2 = rng.integers(-3, 4, size=(2, r))
    A = np.tensordot(c1, a.astype(np.int64), axes=1)
    B = np.tensordot(c2, a.astype(np.int64), axes=1)
    if not np.array_equal(A @ B, B @ A):
        raise VerificationError("class matrices do not commute")

    return ClassData(G, partition, sizes, inverse_class, a)


# ----------------------------------------------------------------------------
# Prime selection
# ----------------------------------------------------------------------------

def is_admissible_prime(G: FiniteGroup, p: int) -> bool:
    return isprime(p) and G.order % p != 0 and (p - 1) % G.exponent() == 0


def admissible_prime(G: FiniteGroup, after: int = 1, limit: Optional[int] = None) -> int:
    """Smallest prime p > after with p ≡ 1 (mod exp G) and p not dividing |G|"""
    limit = settings.prime_search_limit if limit is None else limit
    e = G.exponent()
    candidate = ((after - 1) // e + 1) * e + 1
    while candidate < limit:
        if is_admissible_prime(G, candidate):
            return candidate
        candidate += e
    raise PrimeSelectionError(f"no admissible prime below {limit} for exponent {e}")


def select_prime(G: FiniteGroup, prime: Optional[int] = None) -> int:
    """Explicit prime, then the configured override, then the smallest admissible prime"""
    chosen = prime if prime is not None else settings.dual_prime
    if chosen is None:
        return admissible_prime(G)
    if not is_admissible_prime(G, chosen):
        raise PrimeSelectionError(
            f"prime {chosen} is not admissible for {G.label}: need p prime, p = 1 mod {G.exponent()}, "
            f"p not dividing {G.order}")
    return chosen


def table_seed(G: FiniteGroup) -> int:
    digest = hashlib.sha256(np.ascontiguousarray(G.table, dtype=np.int32).tobytes()).hexdigest()
    return int(digest[:16], 16)


# ----------------------------------------------------------------------------
# Simultaneous eigenspaces over GF(p)
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CentralCharacterTable:
    """One row (ω(C_1), ..., ω(C_r)) mod p per irreducible, ω(C_identity) = 1"""

    class_data: ClassData
    prime: int
    seed: int
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def group(self) -> FiniteGroup:
        return self.class_data.group

    def row_index(self) -> dict:
        return {row: i for i, row in enumerate(self.rows)}


def _to_field(matrix: np.ndarray, field) -> DomainMatrix:
    rows = [[field(int(x)) for x in row] for row in matrix.tolist()]
    return DomainMatrix(rows, matrix.shape, field)


def _to_ints(dm: DomainMatrix, field, p: int) -> List[List[int]]:
    return [[int(field.to_int(x)) % p for x in row] for row in dm.to_list()]


def _left_eigenspaces(R: DomainMatrix, field, p: int) -> List[DomainMatrix]:
    """Bases (as rows) of {u : u·R = z·u} for every root z of charpoly(R) in GF(p)"""
    d = R.shape[0]
    Rt = R.transpose()
    poly = Poly([int(field.to_int(c)) % p for c in Rt.charpoly()], Symbol("x"), modulus=p)
    spaces = []
    for z in sorted(int(root) % p for root in poly.ground_roots()):
        shifted = Rt - DomainMatrix.diag([field(z)] * d, field)
        basis = shifted.nullspace()
        if basis.shape[0]:
            spaces.append(basis.rref()[0])
    return spaces


def _split(space: DomainMatrix, N: DomainMatrix, field, p: int) -> List[DomainMatrix]:
    """Split a right-N-invariant row space S by the eigenvalues of N restricted to it"""
    S, pivots = space.rref()
    # S·N = R·S and S[:, pivots] = I, so R = (S·N)[:, pivots]
    SN = S * N
    R = SN.extract(list(range(S.shape[0])), list(pivots))
    parts = _left_eigenspaces(R, field, p)
    if sum(part.shape[0] for part in parts) != S.shape[0]:
        raise CharacterTableError(
            f"class algebra does not split over GF({p}) on a space of dimension {S.shape[0]}")
    return [(part * S).rref()[0] for part in parts]


def central_characters(G: FiniteGroup, cd: Optional[ClassData] = None, prime: Optional[int] = None,
                       rounds: Optional[int] = None) -> CentralCharacterTable:
    """
    Simultaneous eigen-rows of the transposed class matrices mod p.

    Spaces are split first by seeded random combinations of class matrices, then
    by each class matrix in turn; anything still wider than one dimension after
    that is reported as a failure.
    """
    cd = class_data(G) if cd is None else cd
    p = select_prime(G, prime)
    rounds = settings.splitting_rounds if rounds is None else rounds
    seed = table_seed(G)
    rng = np.random.default_rng(seed)
    field = GF(p, symmetric=False)
    r = cd.class_count

    # rows w with w·N_i = ω(C_i)·w
    transposed = [np.ascontiguousarray(cd.class_matrix(i).T) for i in range(r)]
    spaces = [DomainMatrix.eye(r, field)]

    def refine(N: DomainMatrix) -> None:
        nonlocal spaces
        refined = []
        for space in spaces:
            refined.extend([space] if space.shape[0] == 1 else _split(space, N, field, p))
        spaces = refined

    stack = np.stack(transposed).astype(np.int64) % p
    for _ in range(rounds):
        if len(spaces) == r:
            break
        coefficients = rng.integers(1, p, size=r)
        combination = np.tensordot(coefficients, stack, axes=1) % p
        refine(_to_field(combination, field))
    for N in transposed:
        if len(spaces) == r:
            break
        refine(_to_field(N % p, field))

    if len(spaces) != r:
        dims = sorted((s.shape[0] for s in spaces), reverse=True)
        raise CharacterTableError(
            f"joint eigenspaces did not reach dimension 1 for {G.label}: dimensions {dims} over GF({p})")

    rows = []
    for space in spaces:
        w = _to_ints(space, field, p)[0]
        scale = pow(w[0], -1, p)
        rows.append(tuple(x * scale % p for x in w))
    rows.sort()

    if len(set(rows)) != r:
        raise VerificationError("central character rows are not pairwise distinct")
    W = np.array(rows, dtype=np.int64)
    # ω(C_i)·ω(C_j) = Σ_k a[i][j][k]·ω(C_k) for every row ω
    actual = np.einsum("ijk,wk->wij", cd.structure_constants.astype(np.int64), W) % p
    expected = W[:, :, None] * W[:, None, :] % p
    if not np.array_equal(actual, expected):
        bad = int(np.flatnonzero((actual != expected).any(axis=(1, 2)))[0])
        raise VerificationError(f"row {rows[bad]} is not a simultaneous eigenvector")

    logger.info("✅ central characters computed", group=G.label, classes=r, prime=p)
    return CentralCharacterTable(cd, p, seed, tuple(rows))
