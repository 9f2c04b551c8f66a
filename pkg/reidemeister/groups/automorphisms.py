"""
Automorphisms of finite groups as permutations of element indices.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from reidemeister.groups.finite_group import FiniteGroup, INDEX_DTYPE
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InvalidAutomorphismError, SizeCapError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class Automorphism:
    """A product-preserving bijection of a group's element indices"""

    group: FiniteGroup
    images: np.ndarray
    label: str = "automorphism"

    def __post_init__(self):
        images = np.ascontiguousarray(self.images, dtype=INDEX_DTYPE)
        images.setflags(write=False)
        object.__setattr__(self, "images", images)
        self._validate()

    def _validate(self) -> None:
        G, f = self.group, self.images
        n = G.order
        if f.shape != (n,):
            raise InvalidAutomorphismError(f"expected {n} images, got shape {f.shape}")
        if not np.array_equal(np.sort(f), np.arange(n)):
            raise InvalidAutomorphismError("map is not bijective")
        if int(f[G.identity]) != G.identity:
            raise InvalidAutomorphismError("map does not fix the identity")
        # f(a·b) == f(a)·f(b) for every pair
        if not np.array_equal(f[G.table], G.table[np.ix_(f, f)]):
            a, b = (int(v) for v in np.argwhere(f[G.table] != G.table[np.ix_(f, f)])[0])
            raise InvalidAutomorphismError(f"map is not multiplicative at ({a}, {b})")

    def __call__(self, a: int) -> int:
        return int(self.images[a])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Automorphism) and other.group is self.group
                and np.array_equal(other.images, self.images))

    def __hash__(self) -> int:
        return hash((id(self.group), self.images.tobytes()))

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.group.order)))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self ∘ other: apply other first"""
        return Automorphism(self.group, self.images[other.images], label=f"{self.label}*{other.label}")

    def inverse(self) -> "Automorphism":
        return Automorphism(self.group, np.argsort(self.images), label=f"{self.label}^-1")

    def power(self, k: int) -> "Automorphism":
        base = self.images if k >= 0 else np.argsort(self.images)
        result = np.arange(self.group.order)
        e = abs(k)
        while e:
            if e & 1:
                result = base[result]
            base = base[base]
            e >>= 1
        return Automorphism(self.group, result, label=f"({self.label})^{k}")

    def order(self) -> int:
        """Least m >= 1 with self^m = id"""
        current = self.images
        identity = np.arange(self.group.order)
        m = 1
        while not np.array_equal(current, identity):
            current = self.images[current]
            m += 1
        return m


def identity_automorphism(G: FiniteGroup) -> Automorphism:
    return Automorphism(G, np.arange(G.order), label="id")


def inner_automorphism(G: FiniteGroup, h: int) -> Automorphism:
    """x -> h x h^-1"""
    h = G.check_index(h)
    images = G.table[G.table[h, :], G.inverses[h]]
    return Automorphism(G, images, label=f"inner({G.name_of(h)})")


def _extend(G: FiniteGroup, gens: Sequence[int], gen_images: Sequence[int]) -> np.ndarray:
    """
    BFS extension of a generator assignment over the generated subgroup.

    Returns the partial image array (-1 outside the generated subgroup) and raises
    on the first edge whose image is inconsistent.
    """
    images = np.full(G.order, -1, dtype=np.int64)
    images[G.identity] = G.identity
    queue = [G.identity]
    head = 0
    table = G.table
    while head < len(queue):
        g = queue[head]
        head += 1
        fg = images[g]
        for s, t in zip(gens, gen_images):
            h = int(table[g, s])
            value = int(table[fg, t])
            if images[h] < 0:
                images[h] = value
                queue.append(h)
            elif images[h] != value:
                raise InvalidAutomorphismError(
                    f"assignment is not well-defined: element {h} receives images {int(images[h])} and {value}")
    return images


def automorphism_from_images(G: FiniteGroup, gen_indices: Sequence[int],
                             gen_images: Sequence[int]) -> Automorphism:
    """The unique multiplicative extension of generators -> images"""
    if len(gen_indices) != len(gen_images):
        raise InvalidAutomorphismError("generator and image lists differ in length")
    gens = [G.check_index(g, "generator") for g in gen_indices]
    imgs = [G.check_index(g, "image") for g in gen_images]
    images = _extend(G, gens, imgs)
    if (images < 0).any():
        raise InvalidAutomorphismError("generators do not generate the group")
    if len(set(images.tolist())) != G.order:
        raise InvalidAutomorphismError("extension is not bijective")
    return Automorphism(G, images, label="images(" + ",".join(f"{g}->{t}" for g, t in zip(gens, imgs)) + ")")


def generating_set(G: FiniteGroup) -> List[int]:
    """Greedy small generating set: repeatedly add a largest-order element outside the span"""
    orders = G.element_orders()
    candidates = sorted(range(G.order), key=lambda a: (-int(orders[a]), a))
    gens: List[int] = []
    span = np.zeros(G.order, dtype=bool)
    span[G.identity] = True
    for a in candidates:
        if span.all():
            break
        if span[a]:
            continue
        gens.append(a)
        span = _extend(G, gens, gens) >= 0
    return gens


def enumerate_automorphisms(G: FiniteGroup, cap: Optional[int] = None) -> List[Automorphism]:
    """
    The full automorphism group by backtracking over generator images.

    Generator i may only go to elements of the same order; each partial assignment
    must extend consistently and injectively to the subgroup it generates. The result
    is sorted by image arrays, so the identity automorphism comes first.
    """
    cap = settings.automorphism_cap if cap is None else cap
    if G.order > cap:
        raise SizeCapError(f"automorphism enumeration is capped at order {cap}, got {G.order}")
    gens = generating_set(G)
    orders = G.element_orders()
    by_order: Dict[int, List[int]] = {}
    for a in range(G.order):
        by_order.setdefault(int(orders[a]), []).append(a)
    choices = [by_order[int(orders[g])] for g in gens]

    found: List[np.ndarray] = []

    def backtrack(assigned: List[int]) -> None:
        depth = len(assigned)
        if depth:
            try:
                partial = _extend(G, gens[:depth], assigned)
            except InvalidAutomorphismError:
                return
            reached = partial[partial >= 0]
            if len(np.unique(reached)) != len(reached):
                return
            if depth == len(gens):
                found.append(partial)
                return
        for candidate in choices[depth]:
            backtrack(assigned + [candidate])

    if gens:
        backtrack([])
    else:
        found.append(np.arange(G.order))

    found.sort(key=lambda images: tuple(images.tolist()))
    result = [Automorphism(G, images, label=f"aut[{i}]") for i, images in enumerate(found)]
    if result:
        result[0] = Automorphism(G, result[0].images, label="id" if result[0].is_identity() else "aut[0]")
    logger.info("✅ automorphisms enumerated", group=G.label, order=G.order, count=len(result))
    return result
