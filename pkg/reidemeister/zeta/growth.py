"""
Growth rate of a sequence: max(1, limsup |a_n|^(1/n)).

This is the only floating-point estimate in the package. A sequence that is
exactly periodic is bounded, so its growth rate is reported as exactly 1.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

from reidemeister.shared.errors import InputError

DEFAULT_WINDOW = 10


@dataclass(frozen=True)
class GrowthEstimate:
    estimate: float
    method: str  # periodic | window
    window: int
    roots: List[float]
    period: Optional[int] = None


def detect_period(values: Sequence[int]) -> Optional[int]:
    """Smallest p with a_(n+p) = a_n throughout, if at least two full periods are present"""
    n = len(values)
    for p in range(1, n // 2 + 1):
        if all(values[i] == values[i + p] for i in range(n - p)):
            return p
    return None


def nth_root(value: int, n: int) -> float:
    value = abs(value)
    return 0.0 if value == 0 else math.exp(math.log(value) / n)


def growth_rate(values: Sequence[int], window: Optional[int] = None) -> GrowthEstimate:
    if not values:
        raise InputError("growth rate needs a non-empty sequence")
    if any(isinstance(v, float) and math.isinf(v) for v in values):
        raise InputError("growth rate needs finite values")
    values = [int(v) for v in values]
    window = min(DEFAULT_WINDOW, len(values)) if window is None else window
    if not 1 <= window <= len(values):
        raise InputError(f"window must lie in 1..{len(values)}, got {window}")

    start = len(values) - window + 1
    roots = [nth_root(values[n - 1], n) for n in range(start, len(values) + 1)]
    period = detect_period(values)
    if period is not None:
        return GrowthEstimate(1.0, "periodic", window, roots, period)
    return GrowthEstimate(max(1.0, max(roots)), "window", window, roots)
