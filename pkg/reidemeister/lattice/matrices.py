"""
Exact square integer matrices backed by sympy's DomainMatrix over ZZ.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.polys.matrices import DomainMatrix

from reidemeister.shared.errors import InputError, NotAutomorphismError


def _as_int(value) -> int:
    if isinstance(value, bool):
        raise InputError("matrix entries must be integers, got a boolean")
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    try:
        return int(ZZ.convert(value))
    except Exception as exc:
        raise InputError(f"matrix entry {value!r} is not an integer") from exc


@dataclass(frozen=True)
class IntMatrix:
    """An n x n matrix with arbitrary-precision integer entries"""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_as_int(x) for x in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise InputError(f"matrix must be square and non-empty, got {len(rows)} rows "
                             f"of lengths {sorted({len(r) for r in rows})}")
        object.__setattr__(self, "entries", rows)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in dm.to_list()))

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(x) for x in row] for row in self.entries], (self.n, self.n), ZZ)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_size(other)
        return IntMatrix.from_domain(self.to_domain() * other.to_domain())

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_size(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_size(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def power(self, k: int) -> "IntMatrix":
        if k < 0:
            raise InputError("negative matrix powers are not supported")
        return IntMatrix.from_domain(self.to_domain() ** k)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """M·v for a column vector v"""
        v = check_vector(vector, self.n)
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    def det(self) -> int:
        return int(self.to_domain().det())

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def require_unimodular(self) -> "IntMatrix":
        d = self.det()
        if abs(d) != 1:
            raise NotAutomorphismError(f"matrix has determinant {d}; an automorphism of Z^{self.n} needs +-1")
        return self

    def adjugate(self) -> "IntMatrix":
        return IntMatrix.from_rows(Matrix(self.to_list()).adjugate().tolist())

    def one_minus(self) -> "IntMatrix":
        """I - M"""
        return IntMatrix.identity(self.n) - self

    def mod(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(a % k for a in row) for row in self.entries))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def _check_same_size(self, other: "IntMatrix") -> None:
        if other.n != self.n:
            raise InputError(f"dimension mismatch: {self.n} vs {other.n}")

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.entries) + "]"


def check_vector(vector: Sequence[int], n: int) -> Tuple[int, ...]:
    v = tuple(_as_int(x) for x in vector)
    if len(v) != n:
        raise InputError(f"vector has length {len(v)}, expected {n}")
    return v


def char_poly(M: IntMatrix) -> List[int]:
    """
    Coefficients of det(xI - M), highest degree first (leading 1).

    Read lowest degree first, the same list gives det(I - zM).
    """
    return [int(c) for c in M.to_domain().charpoly()]


def det_one_minus_zm(M: IntMatrix) -> List[int]:
    """Coefficients of det(I - zM), constant term first"""
    return char_poly(M)


def random_unimodular(n: int, rng: np.random.Generator, bound: int = 5, steps: Optional[int] = None) -> IntMatrix:
    """
    A unimodular matrix with entries in [-bound, bound] built from elementary operations.

    Each step adds a multiple of one row to another, swaps two rows or flips a sign;
    steps that would push an entry past the bound are skipped.
    """
    if n < 1:
        raise InputError("dimension must be positive")
    rows = np.eye(n, dtype=np.int64)
    steps = 4 * n if steps is None else steps
    for _ in range(steps):
        op = int(rng.integers(0, 4))
        i, j = (int(v) for v in rng.choice(n, size=2, replace=False)) if n > 1 else (0, 0)
        if op <= 1 and n > 1:
            c = int(rng.choice([-2, -1, 1, 2]))
            candidate = rows[i] + c * rows[j]
            if np.abs(candidate).max() <= bound:
                rows[i] = candidate
        elif op == 2 and n > 1:
            rows[[i, j]] = rows[[j, i]]
        else:
            rows[i] = -rows[i]
    return IntMatrix.from_rows(rows.tolist())
