"""
Truncated power series with exact rational coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from reidemeister.shared.errors import InputError

Number = Union[int, Fraction]


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PowerSeries:
    """c_0 + c_1 z + ... + c_N z^N (mod z^(N+1))"""

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise InputError("a power series needs at least the constant term")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[Number], order: int) -> "PowerSeries":
        """Pad with zeros or truncate to exactly order + 1 coefficients"""
        coeffs = list(coefficients)[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Number, order: int) -> "PowerSeries":
        return cls.from_coefficients([c], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.constant(1, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def _aligned(self, other: "PowerSeries") -> Tuple[Sequence[Fraction], Sequence[Fraction], int]:
        order = min(self.order, other.order)
        return self.coefficients[:order + 1], other.coefficients[:order + 1], order

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        a, b, _ = self._aligned(other)
        return PowerSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        a, b, _ = self._aligned(other)
        return PowerSeries(tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coefficients))

    def scale(self, c: Number) -> "PowerSeries":
        return PowerSeries(tuple(Fraction(c) * x for x in self.coefficients))

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        a, b, order = self._aligned(other)
        out = [Fraction(0)] * (order + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(order + 1 - i):
                    out[i + j] += x * b[j]
        return PowerSeries(tuple(out))

    def reciprocal(self) -> "PowerSeries":
        c = self.coefficients
        if c[0] == 0:
            raise InputError("reciprocal needs a nonzero constant term")
        inv0 = 1 / c[0]
        h = [inv0]
        for n in range(1, self.order + 1):
            h.append(-inv0 * sum(c[k] * h[n - k] for k in range(1, n + 1)))
        return PowerSeries(tuple(h))

    def exp(self) -> "PowerSeries":
        """f = exp(g) from n f_n = sum_k k g_k f_(n-k)"""
        g = self.coefficients
        if g[0] != 0:
            raise InputError("exp needs constant term 0")
        f = [Fraction(1)]
        for n in range(1, self.order + 1):
            f.append(sum(k * g[k] * f[n - k] for k in range(1, n + 1)) / n)
        return PowerSeries(tuple(f))

    def log(self) -> "PowerSeries":
        """g = log(f) from n g_n = n f_n - sum_(k<n) k g_k f_(n-k)"""
        f = self.coefficients
        if f[0] != 1:
            raise InputError("log needs constant term 1")
        g = [Fraction(0)]
        for n in range(1, self.order + 1):
            g.append((n * f[n] - sum(k * g[k] * f[n - k] for k in range(1, n))) / n)
        return PowerSeries(tuple(g))

    def power(self, exponent: Number) -> "PowerSeries":
        """f^e for constant term 1 and rational e"""
        return self.log().scale(exponent).exp()

    def as_strings(self) -> List[str]:
        return [format_fraction(c) for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coefficients):
            if c:
                monomial = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
                value = format_fraction(c)
                terms.append(value if not monomial else (monomial if c == 1 else f"{value}*{monomial}"))
        return (" + ".join(terms) or "0") + f" + O(z^{self.order + 1})"


def exp_of_sum(values: Sequence[Number], order: int) -> PowerSeries:
    """exp(sum_(n>=1) a_n z^n / n) for values[n - 1] = a_n"""
    if len(values) < order:
        raise InputError(f"need {order} sequence terms, got {len(values)}")
    g = [Fraction(0)] + [Fraction(values[n - 1]) / n for n in range(1, order + 1)]
    return PowerSeries(tuple(g)).exp()
