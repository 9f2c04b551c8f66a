"""
Twisted conjugacy classes of finite groups.

Two elements x, y are φ-twisted conjugate when y = g·x·φ(g)^-1 for some g. The
classes are the orbits of that action of G on itself; their number is the
Reidemeister number R(φ).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from reidemeister.groups.automorphisms import Automorphism, generating_set, identity_automorphism
from reidemeister.groups.finite_group import FiniteGroup, INDEX_DTYPE
from reidemeister.groups.orbits import canonical_partition, orbit_labels
from reidemeister.lattice.sequence import ReidemeisterSequence
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InputError, InvalidAutomorphismError, SizeCapError, VerificationError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class TwistedPartition:
    """Partition of G into φ-twisted classes, numbered by smallest member"""

    group: FiniteGroup
    automorphism: Automorphism
    class_of: np.ndarray
    representatives: np.ndarray

    @property
    def class_count(self) -> int:
        return int(len(self.representatives))

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == i)

    def classes(self) -> List[List[int]]:
        return [self.members(i).tolist() for i in range(self.class_count)]

    def same_partition(self, other: "TwistedPartition") -> bool:
        return bool(np.array_equal(self.class_of, other.class_of))


@dataclass(frozen=True)
class TwistedDecision:
    """Outcome of deciding whether x and y are twisted conjugate"""

    x: int
    y: int
    equivalent: bool
    witness: Optional[int] = None
    class_x: Optional[int] = None
    class_y: Optional[int] = None


def twisted_action_table(G: FiniteGroup, phi: Automorphism, acting: Optional[Sequence[int]] = None) -> np.ndarray:
    """rows[i, x] = g_i · x · φ(g_i)^-1 for each acting element g_i (default: all of G)"""
    acting = np.arange(G.order) if acting is None else np.asarray(acting, dtype=np.int64)
    twist = G.inverses[phi.images[acting]]
    return G.table[G.table[acting, :], twist[:, None]]


def twisted_classes(G: FiniteGroup, phi: Automorphism, exhaustive: bool = False,
                    generators: Optional[Sequence[int]] = None) -> TwistedPartition:
    """
    Orbit partition of x -> g·x·φ(g)^-1.

    The action of G is generated by the action of any generating set, so by default
    only generator edges are fed to the union-find. With exhaustive=True every
    (g, x) pair contributes an edge; both give the same canonical partition.
    """
    if phi.group is not G:
        raise InvalidAutomorphismError("automorphism belongs to a different group")
    if exhaustive:
        acting = None
    else:
        acting = list(generators) if generators is not None else generating_set(G)
    images = twisted_action_table(G, phi, acting)
    sources = np.broadcast_to(np.arange(G.order), images.shape)
    labels = orbit_labels(G.order, sources, images)
    class_of, representatives = canonical_partition(labels)
    class_of = class_of.astype(INDEX_DTYPE)
    class_of.setflags(write=False)
    representatives = representatives.astype(INDEX_DTYPE)
    representatives.setflags(write=False)
    return TwistedPartition(G, phi, class_of, representatives)


def conjugacy_classes(G: FiniteGroup) -> TwistedPartition:
    return twisted_classes(G, identity_automorphism(G))


def reidemeister_number_finite(G: FiniteGroup, phi: Automorphism) -> int:
    return twisted_classes(G, phi).class_count


def twisted_decide_finite(G: FiniteGroup, phi: Automorphism, x: int, y: int,
                          partition: Optional[TwistedPartition] = None) -> TwistedDecision:
    """Decide x ~ y; an equivalent answer carries the smallest witness g"""
    x = G.check_index(x, "x")
    y = G.check_index(y, "y")
    # column x of the full action table: every g·x·φ(g)^-1
    reached = G.table[G.table[:, x], G.inverses[phi.images]]
    hits = np.flatnonzero(reached == y)
    if partition is None:
        partition = twisted_classes(G, phi)
    cx, cy = int(partition.class_of[x]), int(partition.class_of[y])
    if hits.size == 0:
        if cx == cy:
            raise VerificationError(f"elements {x} and {y} share a class but no witness exists")
        return TwistedDecision(x, y, False, None, cx, cy)

    g = int(hits[0])
    if G.mul(G.mul(g, x), G.inv(phi(g))) != y:
        raise VerificationError(f"witness {g} does not satisfy y = g x phi(g)^-1")
    if cx != cy:
        raise VerificationError(f"witness {g} found but partition separates {x} and {y}")
    return TwistedDecision(x, y, True, g, cx, cy)


def invariant_class_count(G: FiniteGroup, phi: Automorphism) -> int:
    """Number of ordinary conjugacy classes C with φ(C) = C"""
    sigma = class_permutation(G, phi)
    return int(np.count_nonzero(sigma == np.arange(len(sigma))))


def class_permutation(G: FiniteGroup, phi: Automorphism, classes: Optional[TwistedPartition] = None) -> np.ndarray:
    """σ with φ(C_j) = C_σ(j) on ordinary conjugacy classes"""
    classes = conjugacy_classes(G) if classes is None else classes
    return classes.class_of[phi.images[classes.representatives]].astype(np.int64)


def twisted_image_property(G: FiniteGroup, phi: Automorphism) -> bool:
    """Every x is φ-twisted conjugate to φ(x) (take g = x^-1)"""
    partition = twisted_classes(G, phi)
    return bool(np.array_equal(partition.class_of, partition.class_of[phi.images]))


def finite_reidemeister_sequence(G: FiniteGroup, phi: Automorphism, length: int) -> ReidemeisterSequence:
    """R(φ^k) for k = 1..length"""
    if length < 0:
        raise InputError(f"sequence length must be non-negative, got {length}")
    generators = generating_set(G)
    terms = []
    power = identity_automorphism(G)
    for _ in range(length):
        power = phi.compose(power)
        terms.append(twisted_classes(G, power, generators=generators).class_count)
    return ReidemeisterSequence(tuple(terms), source=f"{G.label} / {phi.label}")


def semidirect_with_cyclic(G: FiniteGroup, phi: Automorphism, m: int, cap: Optional[int] = None) -> FiniteGroup:
    """
    G ⋊_φ Z_m with (g, k)·(h, l) = (g·φ^k(h), k + l mod m).

    The pair (g, k) has index k·|G| + g, so each coset G·t^k is a contiguous block.
    """
    cap = settings.semidirect_cap if cap is None else cap
    if m < 1:
        raise InvalidAutomorphismError(f"cyclic factor order must be >= 1, got {m}")
    n = G.order
    if n * m > cap:
        raise SizeCapError(f"semidirect product of order {n * m} exceeds the cap {cap}")

    powers = np.empty((m, n), dtype=np.int64)
    powers[0] = np.arange(n)
    for k in range(1, m):
        powers[k] = phi.images[powers[k - 1]]
    if not np.array_equal(phi.images[powers[m - 1]], np.arange(n)):
        raise InvalidAutomorphismError(f"automorphism does not satisfy phi^{m} = id")

    # twisted[k, g, h] = g · φ^k(h)
    twisted = G.table[np.arange(n)[None, :, None], powers[:, None, :]]
    ks = np.arange(m)
    coset = (ks[:, None] + ks[None, :]) % m
    table = coset[:, None, :, None] * n + twisted[:, :, None, :]
    table = table.reshape(n * m, n * m)

    # (g, k)^-1 = (φ^-k(g^-1), -k)
    inverse_coset = (-ks) % m
    inverses = inverse_coset[:, None] * n + powers[inverse_coset][:, G.inverses]
    inverses = inverses.reshape(-1)

    names = tuple(
        G.name_of(g) if k == 0 else f"{G.name_of(g)} t" + ("" if k == 1 else f"^{k}")
        for k in range(m) for g in range(n)
    )
    logger.debug("semidirect product built", base=G.label, m=m, order=n * m)
    return FiniteGroup(table, 0, inverses, names, label=f"{G.label} x| Z{m}")
