"""
Closed forms of zeta functions: products of (1 - z^d)^e times a rational part.

Exponents are exact rationals, so a radical of a rational function is carried as
a rational exponent and never as a floating-point root.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from reidemeister.zeta.series import PowerSeries, format_fraction

Polynomial = Tuple[int, ...]


def normalize_polynomial(coefficients: Sequence[int]) -> Polynomial:
    """Drop trailing zeros; coefficients are lowest degree first"""
    coeffs = [int(c) for c in coefficients]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) or (0,)


def as_cyclotomic_factor(poly: Polynomial) -> int:
    """d when poly is exactly 1 - z^d, else 0"""
    if len(poly) >= 2 and poly[0] == 1 and poly[-1] == -1 and not any(poly[1:-1]):
        return len(poly) - 1
    return 0


def format_polynomial(poly: Polynomial) -> str:
    parts = []
    for degree, c in enumerate(poly):
        if c == 0:
            continue
        monomial = "" if degree == 0 else ("z" if degree == 1 else f"z^{degree}")
        magnitude = abs(c)
        body = str(magnitude) if not monomial else (monomial if magnitude == 1 else f"{magnitude}{monomial}")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) or "0"


def _polynomial_series(poly: Polynomial, order: int) -> PowerSeries:
    return PowerSeries.from_coefficients(poly, order)


def _factor_series(d: int, exponent: Fraction, order: int) -> PowerSeries:
    """(1 - z^d)^e by the generalized binomial series"""
    coeffs = [Fraction(0)] * (order + 1)
    term = Fraction(1)
    k = 0
    while d * k <= order:
        coeffs[d * k] = term
        term = -term * (exponent - k) / (k + 1)
        k += 1
    return PowerSeries(tuple(coeffs))


@dataclass(frozen=True)
class ZetaForm:
    """∏ (1 - z^d)^(e_d) · ∏ numerator / ∏ denominator"""

    factors: Tuple[Tuple[int, Fraction], ...] = ()
    numerator: Tuple[Polynomial, ...] = ()
    denominator: Tuple[Polynomial, ...] = field(default=())

    @classmethod
    def build(cls, factors: Sequence[Tuple[int, Fraction]] = (),
              numerator: Sequence[Sequence[int]] = (),
              denominator: Sequence[Sequence[int]] = ()) -> "ZetaForm":
        """Canonical form: cyclotomic polynomials become factors, equal terms cancel"""
        exponents: Dict[int, Fraction] = defaultdict(Fraction)
        for d, e in factors:
            exponents[int(d)] += Fraction(e)

        def collect(polys, sign) -> List[Polynomial]:
            kept = []
            for poly in polys:
                poly = normalize_polynomial(poly)
                d = as_cyclotomic_factor(poly)
                if d:
                    exponents[d] += sign
                elif poly != (1,):
                    kept.append(poly)
            return kept

        num = collect(numerator, 1)
        den = collect(denominator, -1)
        for poly in list(num):
            if poly in den:
                num.remove(poly)
                den.remove(poly)

        merged = tuple(sorted((d, e) for d, e in exponents.items() if e != 0))
        return cls(merged, tuple(sorted(num)), tuple(sorted(den)))

    def is_rational(self) -> bool:
        return all(e.denominator == 1 for _, e in self.factors)

    def expand(self, order: int) -> PowerSeries:
        result = PowerSeries.one(order)
        for d, e in self.factors:
            result = result * _factor_series(d, e, order)
        for poly in self.numerator:
            result = result * _polynomial_series(poly, order)
        for poly in self.denominator:
            result = result * _polynomial_series(poly, order).reciprocal()
        return result

    def __str__(self) -> str:
        if not (self.factors or self.numerator or self.denominator):
            return "1"
        if self.is_rational() and (self.numerator or self.denominator):
            top = [f"({format_polynomial(p)})" for p in self.numerator]
            bottom = [f"({format_polynomial(p)})" for p in self.denominator]
            for d, e in self.factors:
                term = "(" + format_polynomial((1,) + (0,) * (d - 1) + (-1,)) + ")"
                power = abs(e.numerator)
                rendered = term if power == 1 else f"{term}^{power}"
                (top if e > 0 else bottom).append(rendered)
            text = " ".join(top) or "1"
            return text if not bottom else f"{text}/{' '.join(bottom)}"

        parts = []
        for d, e in self.factors:
            term = "(" + format_polynomial((1,) + (0,) * (d - 1) + (-1,)) + ")"
            if e == 1:
                parts.append(term)
            elif e.denominator == 1:
                parts.append(f"{term}^{e.numerator}")
            else:
                parts.append(f"{term}^({format_fraction(e)})")
        parts.extend(f"({format_polynomial(p)})" for p in self.numerator)
        parts.extend(f"({format_polynomial(p)})^-1" for p in self.denominator)
        return " ".join(parts)

    def to_record(self) -> dict:
        return {
            "closed_form": str(self),
            "factors": [{"d": d, "exponent": format_fraction(e)} for d, e in self.factors],
            "numerator": [list(p) for p in self.numerator],
            "denominator": [list(p) for p in self.denominator],
            "rational": self.is_rational(),
        }
