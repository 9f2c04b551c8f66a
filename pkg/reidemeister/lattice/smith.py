"""
Smith normal form with unimodular transforms.

The pivot is always the entry of smallest nonzero absolute value in the remaining
block, ties broken row-major, so the factorization is deterministic.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from reidemeister.lattice.matrices import IntMatrix
from reidemeister.shared.errors import VerificationError


@dataclass(frozen=True)
class SmithForm:
    """U·A·V = D with D diagonal, d_i | d_(i+1), zeros trailing"""

    source: IntMatrix
    U: IntMatrix
    V: IntMatrix
    D: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D.entries[i][i] for i in range(self.D.n))


def _pivot(A: List[List[int]], t: int) -> Optional[Tuple[int, int]]:
    best = None
    n = len(A)
    for i in range(t, n):
        for j in range(t, n):
            a = abs(A[i][j])
            if a and (best is None or a < best[0]):
                best = (a, i, j)
    return None if best is None else (best[1], best[2])


def _swap_rows(X: List[List[int]], i: int, j: int) -> None:
    X[i], X[j] = X[j], X[i]


def _swap_cols(X: List[List[int]], i: int, j: int) -> None:
    for row in X:
        row[i], row[j] = row[j], row[i]


def _add_row(X: List[List[int]], target: int, source: int, c: int) -> None:
    """row[target] += c·row[source]"""
    X[target] = [a + c * b for a, b in zip(X[target], X[source])]


def _add_col(X: List[List[int]], target: int, source: int, c: int) -> None:
    for row in X:
        row[target] += c * row[source]


def smith_normal_form(A: IntMatrix) -> SmithForm:
    n = A.n
    D = A.to_list()
    U = IntMatrix.identity(n).to_list()
    V = IntMatrix.identity(n).to_list()

    for t in range(n):
        while True:
            pos = _pivot(D, t)
            if pos is None:
                break
            i, j = pos
            if i != t:
                _swap_rows(D, t, i)
                _swap_rows(U, t, i)
            if j != t:
                _swap_cols(D, t, j)
                _swap_cols(V, t, j)
            p = D[t][t]

            clean = True
            for r in range(t + 1, n):
                q = D[r][t] // p
                if q:
                    _add_row(D, r, t, -q)
                    _add_row(U, r, t, -q)
                clean = clean and D[r][t] == 0
            for c in range(t + 1, n):
                q = D[t][c] // p
                if q:
                    _add_col(D, c, t, -q)
                    _add_col(V, c, t, -q)
                clean = clean and D[t][c] == 0
            if not clean:
                continue

            # the pivot must divide the whole remaining block
            offender = next((r for r in range(t + 1, n)
                             if any(D[r][c] % p for c in range(t + 1, n))), None)
            if offender is None:
                break
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)

        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]

    form = SmithForm(A, IntMatrix.from_rows(U), IntMatrix.from_rows(V), IntMatrix.from_rows(D))
    if form.U @ A @ form.V != form.D:
        raise VerificationError(f"Smith form reconstruction failed for {A}")
    return form


def invariant_factors(A: IntMatrix) -> Tuple[int, ...]:
    return smith_normal_form(A).diagonal
