"""
Reidemeister number sequences R(φ^k), k = 1, 2, ...

Terms are exact integers or math.inf; infinity is a value here, never an error.
"""

import math
from dataclasses import dataclass
from typing import List, Tuple, Union

INFINITE = math.inf

Term = Union[int, float]


def format_term(value: Term) -> str:
    return "inf" if value == INFINITE else str(int(value))


@dataclass(frozen=True)
class ReidemeisterSequence:
    """terms[k - 1] = R(φ^k)"""

    terms: Tuple[Term, ...]
    source: str = ""

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, k: int) -> Term:
        """1-based access: seq[k] = R(φ^k)"""
        if not 1 <= k <= len(self.terms):
            raise IndexError(f"sequence index {k} outside 1..{len(self.terms)}")
        return self.terms[k - 1]

    def is_finite(self, k: int) -> bool:
        return self[k] != INFINITE

    def all_finite(self) -> bool:
        return all(t != INFINITE for t in self.terms)

    def as_strings(self) -> List[str]:
        return [format_term(t) for t in self.terms]
