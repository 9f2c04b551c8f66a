"""
Möbius congruences: sum_(d | n) μ(d) a_(n/d) ≡ 0 (mod n).

Holds for R(φ^n) whenever all the terms involved are finite, and for Lefschetz
numbers (Dold congruences). An n whose sum needs an infinite term is skipped.
"""

from typing import List, Optional, Sequence, Union

from pydantic import BaseModel
from sympy import divisors

from reidemeister.lattice.sequence import INFINITE, ReidemeisterSequence, Term
from reidemeister.shared.errors import InputError
from reidemeister.shared.logging import get_logger
from reidemeister.zeta.functions import mobius

logger = get_logger(__name__)


class CongruenceEntry(BaseModel):
    n: int
    mobius_sum: Optional[int] = None
    residue: Optional[int] = None
    status: str  # ok | violation | skipped


class CongruenceAudit(BaseModel):
    source: str
    max_n: int
    entries: List[CongruenceEntry]
    violations: List[int]
    skipped: List[int]

    @property
    def passed(self) -> bool:
        return not self.violations


def congruence_audit(sequence: Union[ReidemeisterSequence, Sequence[Term]], max_n: Optional[int] = None,
                     source: str = "") -> CongruenceAudit:
    if isinstance(sequence, ReidemeisterSequence):
        terms = list(sequence.terms)
        source = source or sequence.source
    else:
        terms = list(sequence)
    max_n = len(terms) if max_n is None else max_n
    if not 0 <= max_n <= len(terms):
        raise InputError(f"max_n must lie in 0..{len(terms)}, got {max_n}")

    entries, violations, skipped = [], [], []
    for n in range(1, max_n + 1):
        needed = [(d, terms[n // d - 1]) for d in divisors(n) if mobius(d)]
        if any(t == INFINITE for _, t in needed):
            entries.append(CongruenceEntry(n=n, status="skipped"))
            skipped.append(n)
            continue
        total = sum(mobius(d) * int(t) for d, t in needed)
        residue = total % n
        status = "ok" if residue == 0 else "violation"
        if residue:
            violations.append(n)
        entries.append(CongruenceEntry(n=n, mobius_sum=total, residue=residue, status=status))

    if violations:
        logger.warning("⚠️ congruence violations", source=source, violations=violations)
    return CongruenceAudit(source=source, max_n=max_n, entries=entries, violations=violations, skipped=skipped)
