"""
Finite groups given by dense multiplication tables.

Elements are indices 0..order-1; table[a][b] is the index of a·b. Every builder
places the identity at index 0.
"""

from dataclasses import dataclass, field
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InvalidGroupError, SizeCapError, InputError
from reidemeister.shared.logging import get_logger

logger = get_logger(__name__)

INDEX_DTYPE = np.int32
MAX_PERMUTATION_DEGREE = 16
MAX_SYMMETRIC_DEGREE = 6


def _frozen(array) -> np.ndarray:
    out = np.ascontiguousarray(array, dtype=INDEX_DTYPE)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group with O(1) multiplication through its Cayley table"""

    table: np.ndarray
    identity: int
    inverses: np.ndarray
    element_names: Optional[Tuple[str, ...]] = None
    label: str = "group"
    _orders: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "table", _frozen(self.table))
        object.__setattr__(self, "inverses", _frozen(self.inverses))
        object.__setattr__(self, "identity", int(self.identity))
        if self.element_names is not None:
            object.__setattr__(self, "element_names", tuple(str(x) for x in self.element_names))

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_orders(self) -> np.ndarray:
        """Order of every element, computed by simultaneous powering"""
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            elements = np.arange(n)
            current = elements.copy()
            for k in range(1, n + 1):
                done = (current == self.identity) & (orders == 0)
                orders[done] = k
                if orders.all():
                    break
                current = self.table[current, elements]
            object.__setattr__(self, "_orders", orders)
        return self._orders

    def element_order(self, a: int) -> int:
        return int(self.element_orders()[a])

    def exponent(self) -> int:
        return lcm(*(int(x) for x in np.unique(self.element_orders())))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def name_of(self, a: int) -> str:
        if self.element_names is None:
            return str(a)
        return self.element_names[a]

    def check_index(self, a: int, what: str = "element") -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= int(a) < self.order:
            raise InputError(f"{what} index {a} out of range for a group of order {self.order}")
        return int(a)

    def validate(self, check_associativity: bool = True) -> "FiniteGroup":
        """Check every FiniteGroup invariant; raises InvalidGroupError"""
        _check_latin_square(self.table)
        n = self.order
        e = self.identity
        elements = np.arange(n)
        if not (np.array_equal(self.table[e], elements) and np.array_equal(self.table[:, e], elements)):
            raise InvalidGroupError(f"element {e} is not the identity")
        if not np.array_equal(self.table[elements, self.inverses], np.full(n, e)):
            bad = int(np.flatnonzero(self.table[elements, self.inverses] != e)[0])
            raise InvalidGroupError(f"inverse table is wrong at element {bad}")
        if check_associativity:
            _check_associativity(self.table)
        return self


def _check_latin_square(table: np.ndarray) -> None:
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidGroupError(f"table must be a non-empty square array, got shape {table.shape}")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise InvalidGroupError(f"table entries must lie in 0..{n - 1}")
    expected = np.arange(n)
    rows_ok = (np.sort(table, axis=1) == expected).all(axis=1)
    if not rows_ok.all():
        raise InvalidGroupError(f"row {int(np.flatnonzero(~rows_ok)[0])} is not a permutation")
    cols_ok = (np.sort(table, axis=0) == expected[:, None]).all(axis=0)
    if not cols_ok.all():
        raise InvalidGroupError(f"column {int(np.flatnonzero(~cols_ok)[0])} is not a permutation")


def _check_associativity(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= settings.associativity_exhaustive_limit:
        for a in range(n):
            # lhs[b, c] = (a·b)·c, rhs[b, c] = a·(b·c)
            lhs = table[table[a]]
            rhs = table[a][table]
            if not np.array_equal(lhs, rhs):
                b, c = (int(v) for v in np.argwhere(lhs != rhs)[0])
                raise InvalidGroupError(f"table is not associative at ({a}, {b}, {c})")
        return

    rng = np.random.default_rng(n)
    remaining = 10 * n * n
    chunk = 1_000_000
    while remaining > 0:
        size = min(chunk, remaining)
        a, b, c = rng.integers(0, n, size=(3, size))
        bad = table[table[a, b], c] != table[a, table[b, c]]
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise InvalidGroupError(f"table is not associative at ({a[i]}, {b[i]}, {c[i]})")
        remaining -= size
    logger.debug("associativity sampled", order=n, triples=10 * n * n)


# ----------------------------------------------------------------------------
# Group specifications
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicSpec:
    n: int


@dataclass(frozen=True)
class DihedralSpec:
    n: int


@dataclass(frozen=True)
class SymmetricSpec:
    n: int


@dataclass(frozen=True)
class TableSpec:
    table: Tuple[Tuple[int, ...], ...]
    names: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class PermutationSpec:
    degree: int
    generators: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ProductSpec:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[CyclicSpec, DihedralSpec, SymmetricSpec, TableSpec, PermutationSpec, ProductSpec]


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Construct a FiniteGroup from a specification"""
    if isinstance(spec, CyclicSpec):
        return cyclic(spec.n)
    if isinstance(spec, DihedralSpec):
        return dihedral(spec.n)
    if isinstance(spec, SymmetricSpec):
        return symmetric(spec.n)
    if isinstance(spec, TableSpec):
        return from_table(spec.table, names=spec.names)
    if isinstance(spec, PermutationSpec):
        return from_permutations(spec.degree, spec.generators)
    if isinstance(spec, ProductSpec):
        return direct_product(build_group(spec.left), build_group(spec.right))
    raise InputError(f"unsupported group specification: {spec!r}")


# ----------------------------------------------------------------------------
# Builders
# ----------------------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError(f"cyclic group needs n >= 1, got {n}")
    elements = np.arange(n)
    table = np.add.outer(elements, elements) % n
    inverses = (-elements) % n
    return FiniteGroup(table, 0, inverses, tuple(str(a) for a in range(n)), label=f"cyclic({n})")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index e·n + k stands for r^k s^e"""
    if n < 3:
        raise InputError(f"dihedral group needs n >= 3, got {n}")
    idx = np.arange(2 * n)
    k, e = idx % n, idx // n
    sign = np.where(e == 1, -1, 1)
    # r^a s^e · r^b s^f = r^(a + (-1)^e b) s^(e+f)
    rot = (k[:, None] + sign[:, None] * k[None, :]) % n
    ref = (e[:, None] + e[None, :]) % 2
    table = ref * n + rot
    inverses = np.where(e == 1, idx, (-k) % n)
    names = []
    for i in idx:
        r = "" if k[i] == 0 else ("r" if k[i] == 1 else f"r^{k[i]}")
        s = "s" if e[i] else ""
        names.append((r + (" " if r and s else "") + s) or "1")
    return FiniteGroup(table, 0, inverses, tuple(names), label=f"dihedral({n})")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise InputError(f"symmetric group degree must lie in 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    generators = []
    if n >= 2:
        generators.append((1, 0) + tuple(range(2, n)))
    if n >= 3:
        generators.append(tuple(range(1, n)) + (0,))
    group = from_permutations(n, generators)
    return FiniteGroup(group.table, 0, group.inverses, group.element_names, label=f"symmetric({n})")


def from_table(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
               label: str = "table") -> FiniteGroup:
    """Validate a user table whose identity is element 0"""
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InvalidGroupError(f"table is not a rectangular integer array: {exc}") from exc
    _check_latin_square(array)
    n = array.shape[0]
    elements = np.arange(n)
    if not (np.array_equal(array[0], elements) and np.array_equal(array[:, 0], elements)):
        raise InvalidGroupError("element 0 is not the identity")
    inverses = np.argmax(array == 0, axis=1)
    if names is not None and len(names) != n:
        raise InvalidGroupError(f"expected {n} element names, got {len(names)}")
    group = FiniteGroup(array, 0, inverses, tuple(names) if names is not None else None, label=label)
    return group.validate(check_associativity=True)


def _permutation_keys(perms: np.ndarray) -> np.ndarray:
    shifts = (4 * np.arange(perms.shape[1])).astype(np.uint64)
    return np.bitwise_or.reduce(perms.astype(np.uint64) << shifts, axis=1)


def _cycle_notation(perm: Sequence[int]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, i = [], start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i))
            i = perm[i]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


def from_permutations(degree: int, generators: Sequence[Sequence[int]],
                      cap: Optional[int] = None) -> FiniteGroup:
    """
    Close a set of permutations under composition.

    Elements are listed in BFS order from the identity (index 0), multiplying on the
    right by generators; the product is composition, (a·b)(i) = a(b(i)).
    """
    cap = settings.closure_cap if cap is None else cap
    if not 1 <= degree <= MAX_PERMUTATION_DEGREE:
        raise InputError(f"permutation degree must lie in 1..{MAX_PERMUTATION_DEGREE}, got {degree}")
    gens = []
    for i, g in enumerate(generators):
        g = tuple(int(x) for x in g)
        if sorted(g) != list(range(degree)):
            raise InvalidGroupError(f"generator {i} is not a permutation of 0..{degree - 1}")
        gens.append(np.array(g, dtype=np.int64))

    identity = np.arange(degree)
    elements: List[np.ndarray] = [identity]
    seen = {identity.tobytes(): 0}
    head = 0
    while head < len(elements):
        g = elements[head]
        head += 1
        for s in gens:
            h = g[s]
            key = h.tobytes()
            if key not in seen:
                if len(elements) >= cap:
                    raise SizeCapError(f"permutation closure exceeds the order cap {cap}")
                seen[key] = len(elements)
                elements.append(h)

    perms = np.stack(elements)
    n = perms.shape[0]
    keys = _permutation_keys(perms)
    order = np.argsort(keys)
    sorted_keys = keys[order]

    table = np.empty((n, n), dtype=INDEX_DTYPE)
    for a in range(n):
        row_keys = _permutation_keys(perms[a][perms])
        table[a] = order[np.searchsorted(sorted_keys, row_keys)]
    inverses = np.argmax(table == 0, axis=1)
    names = tuple(_cycle_notation(p) for p in perms)
    logger.debug("permutation closure complete", degree=degree, order=n)
    return FiniteGroup(table, 0, inverses, names, label=f"permutation(degree={degree})")


def direct_product(left: FiniteGroup, right: FiniteGroup) -> FiniteGroup:
    """Direct product; the pair (a, b) has index a·|right| + b"""
    n1, n2 = left.order, right.order
    t1 = left.table.astype(np.int64)
    t2 = right.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    inverses = (left.inverses.astype(np.int64)[:, None] * n2 + right.inverses[None, :]).reshape(-1)
    names = tuple(f"({left.name_of(a)},{right.name_of(b)})" for a in range(n1) for b in range(n2))
    return FiniteGroup(table, 0, inverses, names, label=f"{left.label} x {right.label}")


def direct_product_of_cyclics(orders: Sequence[int]) -> FiniteGroup:
    """Z/k1 x ... x Z/kr with mixed-radix indices, first coordinate most significant"""
    if not orders:
        return cyclic(1)
    group = cyclic(orders[0])
    for k in orders[1:]:
        group = direct_product(group, cyclic(k))
    return group
