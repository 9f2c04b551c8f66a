"""
Zeta functions of maps: Lefschetz, periodic Floer, Reidemeister and Nielsen.

Every closed form produced here is checked against the defining series
exp(sum a_n z^n / n) coefficient by coefficient before it is returned.

For a periodic map of period m the Floer zeta function is
    ∏_(d | m) (1 - z^d)^(-P(d)/d),   P(d) = sum_(d1 | d) μ(d1) N_(d/d1),
the subscript being the quotient d/d1.
"""

from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

from sympy import divisors, factorint

from reidemeister.lattice.matrices import IntMatrix, det_one_minus_zm
from reidemeister.lattice.sequence import INFINITE, ReidemeisterSequence
from reidemeister.shared.config.settings import settings
from reidemeister.shared.errors import InfiniteTermError, InputError, VerificationError
from reidemeister.shared.logging import get_logger
from reidemeister.zeta.forms import ZetaForm
from reidemeister.zeta.series import PowerSeries, exp_of_sum

logger = get_logger(__name__)

HomologyMap = Optional[IntMatrix]


def mobius(n: int) -> int:
    """μ(n): 0 unless n is squarefree, else (-1)^(number of prime factors)"""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"mobius is defined for positive integers, got {n!r}")
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def check_truncation(order: int) -> int:
    if not 0 <= order <= settings.max_truncation:
        raise InputError(f"truncation order must lie in 0..{settings.max_truncation}, got {order}")
    return order


def _require_match(form: ZetaForm, series: PowerSeries, what: str) -> None:
    expanded = form.expand(series.order)
    if expanded != series:
        n = next(i for i in range(series.order + 1) if expanded[i] != series[i])
        raise VerificationError(
            f"{what}: closed form {form} disagrees with the series at z^{n} "
            f"({expanded[n]} vs {series[n]})")


# ----------------------------------------------------------------------------
# Lefschetz zeta function
# ----------------------------------------------------------------------------

def lefschetz_numbers(homology_maps: Sequence[HomologyMap], length: int) -> List[int]:
    """L(φ^n) = sum_k (-1)^k trace(φ_(*k)^n) for n = 1..length; None stands for a zero group"""
    totals = [0] * length
    for k, M in enumerate(homology_maps):
        if M is None:
            continue
        sign = -1 if k % 2 else 1
        power = IntMatrix.identity(M.n)
        for n in range(length):
            power = power @ M
            totals[n] += sign * power.trace()
    return totals


def lefschetz_zeta(homology_maps: Sequence[HomologyMap], order: Optional[int] = None) -> Tuple[ZetaForm, PowerSeries]:
    """
    ∏_k det(I - z φ_(*k))^((-1)^(k+1)) together with exp(sum L(φ^n) z^n / n).

    The two are compared to the truncation order; a mismatch raises.
    """
    order = check_truncation(settings.default_truncation if order is None else order)
    if not homology_maps:
        raise InputError("at least one homology map is required")
    numerator, denominator = [], []
    for k, M in enumerate(homology_maps):
        if M is None:
            continue
        (numerator if k % 2 else denominator).append(det_one_minus_zm(M))
    form = ZetaForm.build(numerator=numerator, denominator=denominator)
    series = exp_of_sum(lefschetz_numbers(homology_maps, order), order)
    _require_match(form, series, "lefschetz zeta")
    logger.debug("lefschetz zeta verified", form=str(form), order=order)
    return form, series


# ----------------------------------------------------------------------------
# Periodic Floer zeta function
# ----------------------------------------------------------------------------

def expand_periodic_values(m: int, values: Sequence[int]) -> List[int]:
    """
    N_1..N_m from either per-divisor values (N_d for each d | m, ascending) or
    the full period, which must then satisfy N_n = N_gcd(n, m).
    """
    if m < 1:
        raise InputError(f"period must be >= 1, got {m}")
    values = [int(v) for v in values]
    if any(v < 0 for v in values):
        raise InputError("Floer homology dimensions must be non-negative")
    divs = divisors(m)
    if len(values) == len(divs):
        by_divisor = dict(zip(divs, values))
        return [by_divisor[gcd(n, m)] for n in range(1, m + 1)]
    if len(values) == m:
        for n in range(1, m + 1):
            if values[n - 1] != values[gcd(n, m) - 1]:
                raise InputError(
                    f"N_{n} = {values[n - 1]} differs from N_{gcd(n, m)} = {values[gcd(n, m) - 1]}; "
                    f"a period-{m} sequence must depend on n only through gcd(n, {m})")
        return values
    raise InputError(f"expected {len(divs)} per-divisor values or {m} period values, got {len(values)}")


def periodic_floer_zeta(m: int, values: Sequence[int], order: Optional[int] = None) -> Tuple[ZetaForm, PowerSeries]:
    order = check_truncation(settings.default_truncation if order is None else order)
    period = expand_periodic_values(m, values)

    def N(d: int) -> int:
        return period[d - 1]

    factors = []
    for d in divisors(m):
        P = sum(mobius(d1) * N(d // d1) for d1 in divisors(d))
        factors.append((d, Fraction(-P, d)))
    form = ZetaForm.build(factors=factors)

    full = [period[(n - 1) % m] for n in range(1, order + 1)]
    series = exp_of_sum(full, order)
    _require_match(form, series, "periodic Floer zeta")
    return form, series


# ----------------------------------------------------------------------------
# Reidemeister and Nielsen zeta series
# ----------------------------------------------------------------------------

def reidemeister_zeta_series(sequence: Union[ReidemeisterSequence, Sequence[int]],
                             order: Optional[int] = None) -> PowerSeries:
    """exp(sum R(φ^n) z^n / n) truncated; every term in the window must be finite"""
    order = check_truncation(settings.default_truncation if order is None else order)
    terms = list(sequence.terms if isinstance(sequence, ReidemeisterSequence) else sequence)
    if len(terms) < order:
        raise InputError(f"need {order} sequence terms, got {len(terms)}")
    for n, t in enumerate(terms[:order], start=1):
        if t == INFINITE:
            raise InfiniteTermError(f"R(phi^{n}) is infinite; the Reidemeister zeta series is undefined")
    return exp_of_sum([int(t) for t in terms[:order]], order)


def nielsen_zeta_series(values: Sequence[int], order: Optional[int] = None) -> PowerSeries:
    """exp(sum N(φ^n) z^n / n) for a supplied Nielsen number sequence"""
    order = check_truncation(settings.default_truncation if order is None else order)
    if any(int(v) < 0 for v in values):
        raise InputError("Nielsen numbers are non-negative")
    return exp_of_sum([int(v) for v in values], order)
